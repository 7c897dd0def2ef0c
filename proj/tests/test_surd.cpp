#include <random>

#include "doctest.h"
#include "somoscf/surd.hpp"

using namespace somoscf;

namespace {

const Field Q{};

Poly P(std::initializer_list<long long> constant_first) { return Poly::from_ints(Q, constant_first); }

// the running example: Y^2 = (X^3 - 4X + 1)^2 + 4(X - 2)
SurdContext example_ctx(long long floor = -16) { return SurdContext(P({1, -4, 0, 1}), P({-2, 1}), floor); }

}  // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(SurdContext(P({1, 0, 1}), P({1}), -8), unsupported_error);        // A not cubic
    CHECK_THROWS_AS(SurdContext(P({1, 0, 0, 2}), P({1}), -8), unsupported_error);     // A not monic
    CHECK_THROWS_AS(SurdContext(P({1, 0, 0, 1}), P({0, 0, 0, 1}), -8), unsupported_error);  // deg R > 2
    SurdContext ctx = example_ctx();
    CHECK(ctx.D().degree() == 6);
    CHECK(ctx.D().is_monic());
    CHECK(ctx.Z().top() == 3);
}

TEST_CASE("norm divisibility") {
    SurdContext ctx = example_ctx();
    Poly Pnum = P({-1, 2});  // 2X - 1
    CHECK(norm_check(ctx, Pnum, P({-1, 0, 1})));
    auto [q, r] = poly_divmod(ctx.norm(Pnum), P({-1, 0, 1}));
    CHECK(q == P({-2, -1, 2}));  // quotient 2X^2 - X - 2
    CHECK(r.is_zero());

    CHECK(norm_check(ctx, Pnum, Poly::one(Q)));

    CHECK(!norm_check(ctx, Pnum, P({1, 0, 1})));
    auto [q2, r2] = poly_divmod(ctx.norm(Pnum), P({1, 0, 1}));
    CHECK(r2 == P({8, 2}));  // remainder 2X + 8

    CHECK_THROWS_AS(norm_check(ctx, Pnum, Poly(Q)), zero_division_error);
}

TEST_CASE("forward steps reproduce the displayed expansion") {
    SurdContext ctx = example_ctx();
    SurdLine l0{0, P({-1, 2}), P({-1, 0, 1})};

    SurdStep s0 = surd_step(ctx, l0);
    CHECK(s0.a == P({0, 1}));              // X
    CHECK(s0.line.P == P({0, 1}));         // X
    CHECK(s0.line.Q == P({2, 0, -1}));     // -(X^2 - 2)
    CHECK(s0.line.h == 1);

    SurdStep s1 = surd_step(ctx, s0.line);
    CHECK(s1.a == P({0, -1}));             // -X
    CHECK(s1.line.P == P({-1, 1}));        // X - 1
    CHECK(s1.line.Q == P({-1, -1, 1}));    // X^2 - X - 1

    SurdStep s2 = surd_step(ctx, s1.line);
    CHECK(s2.a == P({1, 1}));              // X + 1
    CHECK(s2.line.P == P({-1, 1}));
    CHECK(s2.line.Q == P({2, 0, -1}));

    SurdStep s3 = surd_step(ctx, s2.line);
    CHECK(s3.a == P({0, -1}));
    CHECK(s3.line.P == P({0, 1}));
    CHECK(s3.line.Q == P({-1, 0, 1}));

    SurdStep s4 = surd_step(ctx, s3.line);
    CHECK(s4.a == P({0, 1}));
    CHECK(s4.line.P == P({-1, 2}));        // 2X - 1 again
    CHECK(s4.line.Q == P({2, 1, -2}));     // -(2X^2 - X - 2)
}

TEST_CASE("backward step mirrors the expansion") {
    SurdContext ctx = example_ctx();
    SurdLine l0{0, P({-1, 2}), P({-1, 0, 1})};
    SurdStep back = surd_step_back(ctx, l0);
    CHECK(back.line.h == -1);
    // P_{-1} = (3/4)(X - 2/3), Q_{-1} = -(2X^2 - X - 2)
    CHECK(back.line.P == Poly::from_coeffs(Q, {FieldScalar::rational(-1, 2), FieldScalar::rational(3, 4)}));
    CHECK(back.line.Q == P({2, 1, -2}));
    SurdStep fwd = surd_step(ctx, back.line);
    CHECK(fwd.line.P == l0.P);
    CHECK(fwd.line.Q == l0.Q);
}

TEST_CASE("reduced lines") {
    SurdContext ctx = example_ctx();
    CHECK(reduced_check(ctx, SurdLine{0, P({-1, 2}), P({-1, 0, 1})}));
    CHECK(reduced_check(ctx, SurdLine{0, P({0, 1}), P({2, 0, -1})}));
    // Z itself: (Z + 0)/1 has degree 3 and conjugate degree deg(R) - 3 < 0
    CHECK(reduced_check(ctx, SurdLine{0, Poly(Q), Poly::one(Q)}));
    // a line with a conjugate part of nonnegative degree is not reduced
    CHECK(!reduced_check(ctx, SurdLine{0, P({0, 0, 0, 2}), Poly::one(Q)}));
    CHECK(!reduced_check(ctx, SurdLine{0, P({0, 1}), P({0, 0, 0, 0, 1})}));
}

TEST_CASE("a trivial surd terminates and the terminal line refuses to step") {
    SurdContext ctx(P({1, -4, 0, 1}), Poly(Q), -8);  // R = 0, Z = A exactly
    SurdLine start{0, Poly(Q), Poly::one(Q)};
    SurdStep s = surd_step(ctx, start);
    CHECK(s.a == P({1, -4, 0, 1}));
    CHECK(s.line.Q.is_zero());
    CHECK_THROWS_AS(surd_step(ctx, s.line), corrupted_line_error);
}

TEST_CASE("invalid lines are rejected at the exact division") {
    SurdContext ctx = example_ctx();
    CHECK_THROWS_AS(surd_step(ctx, SurdLine{0, P({-1, 2}), P({1, 0, 1})}), corrupted_line_error);
}

TEST_CASE("step identities hold along random valid expansions") {
    // product rule: P'^2 + A P' - R = -(Q * Q') at every step; divisibility
    // is preserved; doubled precision changes nothing
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coeff(-4, 4);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Poly A = Poly::from_coeffs(Q, {FieldScalar((long)coeff(rng)), FieldScalar((long)coeff(rng)),
                                       FieldScalar((long)coeff(rng)), FieldScalar(1L)});
        Poly R = Poly::from_coeffs(Q, {FieldScalar((long)coeff(rng)), FieldScalar((long)coeff(rng)),
                                       FieldScalar((long)coeff(rng))});
        if (R.is_zero()) continue;
        SurdContext ctx(A, R, -24);
        SurdContext ctx2(A, R, -48);
        // (Z + 0)/R is always a valid line: R divides P^2 + A P - R trivially... holds with P = R shape
        SurdLine line{0, Poly(Q), R};
        if (!norm_check(ctx, line.P, line.Q)) continue;
        for (int i = 0; i < 10; ++i) {
            SurdStep s = surd_step(ctx, line);
            SurdStep s2 = surd_step(ctx2, line);
            CHECK(s.a == s2.a);
            CHECK(s.line.P == s2.line.P);
            CHECK(s.line.Q == s2.line.Q);
            CHECK(ctx.norm(s.line.P) == -(line.Q * s.line.Q));
            CHECK(norm_check(ctx, s.line.P, s.line.Q));
            if (reduced_check(ctx, line)) {
                CHECK(reduced_check(ctx, s.line));
                CHECK(s.a.degree() >= 1);
            }
            line = s.line;
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("expansion driver orders lines and retries precision") {
    SurdLine seed{0, P({-1, 2}), P({-1, 0, 1})};
    auto lines = surd_expand(P({1, -4, 0, 1}), P({-2, 1}), seed, 3, 2);
    REQUIRE(lines.size() == 6);
    for (size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i].line.h == static_cast<long long>(i) - 2);
    }
    CHECK(lines[2].line.P == P({-1, 2}));
    CHECK(lines[2].a == P({0, 1}));
    CHECK(lines[3].a == P({0, -1}));
}
