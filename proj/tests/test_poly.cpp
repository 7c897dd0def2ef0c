#include <random>

#include "doctest.h"
#include "somoscf/poly.hpp"

using namespace somoscf;

namespace {

const Field Q{};

Poly P(std::initializer_list<long long> constant_first) { return Poly::from_ints(Q, constant_first); }

// independent root oracle: exhaustive small-denominator search
std::vector<FieldScalar> roots_by_search(const Poly& p, long bound) {
    std::vector<FieldScalar> out;
    for (long den = 1; den <= bound; ++den) {
        for (long num = -bound * den; num <= bound * den; ++num) {
            FieldScalar cand = FieldScalar::rational(num, den);
            if (p.eval(cand).is_zero()) {
                bool dup = false;
                for (const auto& r : out) dup = dup || r == cand;
                if (!dup) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FieldScalar& a, const FieldScalar& b) { return compare_rational(a, b) < 0; });
    return out;
}

}  // namespace

TEST_CASE("degree and trimming") {
    CHECK(Poly().degree() == Poly::kMinusInfinity);
    CHECK(P({}).degree() == Poly::kMinusInfinity);
    CHECK(P({0, 0, 0}).degree() == Poly::kMinusInfinity);
    CHECK(P({5}).degree() == 0);
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(P({0, 0, 1}).is_monic());
}

TEST_CASE("divmod worked examples") {
    // (X^4 - 3X^2 + 2) / (X^2 - 1): quotient verified by recomposition
    Poly a = P({2, 0, -3, 0, 1});
    Poly b = P({-1, 0, 1});
    auto [q, r] = poly_divmod(a, b);
    CHECK(q == P({-2, 0, 1}));
    CHECK(r.is_zero());
    CHECK(q * b + r == a);

    auto [q1, r1] = poly_divmod(a, Poly::one(Q));
    CHECK(q1 == a);
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divmod(P({0, 1}), b);
    CHECK(q2.is_zero());
    CHECK(r2 == P({0, 1}));

    CHECK_THROWS_AS(poly_divmod(a, Poly(Q)), zero_division_error);
}

TEST_CASE("divmod recomposes on random inputs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 8);
    Field fp = prime_field(10007);
    for (Field f : {Q, fp}) {
        for (int i = 0; i < 200; ++i) {
            std::vector<FieldScalar> ca, cb;
            for (int j = 0; j <= deg(rng); ++j) ca.push_back(FieldScalar::of(f, coeff(rng)));
            for (int j = 0; j <= deg(rng); ++j) cb.push_back(FieldScalar::of(f, coeff(rng)));
            Poly a = Poly::from_coeffs(f, ca), b = Poly::from_coeffs(f, cb);
            if (b.is_zero()) continue;
            auto [q, r] = poly_divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("evaluation") {
    Poly p = P({1, -4, 0, 1});  // X^3 - 4X + 1
    CHECK(p.eval(FieldScalar(0L)) == FieldScalar(1L));
    CHECK(p.eval(FieldScalar(2L)) == FieldScalar(1L));
    CHECK(P({-12, 6}).eval(FieldScalar(2L)).is_zero());
}

TEST_CASE("rational_roots worked examples") {
    auto r1 = rational_roots(P({-12, 6}));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0] == FieldScalar(2L));

    auto r2 = rational_roots(P({-1, 0, 1}));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == FieldScalar(-1L));
    CHECK(r2[1] == FieldScalar(1L));

    CHECK(rational_roots(P({1, 0, 1})).empty());
    CHECK_THROWS_AS(rational_roots(Poly(Q)), std::invalid_argument);
    CHECK_THROWS_AS(rational_roots(Poly::from_ints(prime_field(7), {1, 1})), field_mismatch_error);
}

TEST_CASE("rational_roots against exhaustive search") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int i = 0; i < 150; ++i) {
        std::vector<FieldScalar> cs;
        int n = deg(rng);
        for (int j = 0; j <= n; ++j) cs.push_back(FieldScalar((long)coeff(rng)));
        Poly p = Poly::from_coeffs(Q, cs);
        if (p.is_zero()) continue;
        auto found = rational_roots(p);
        for (const auto& r : found) CHECK(p.eval(r).is_zero());
        auto oracle = roots_by_search(p, 8);
        REQUIRE(found.size() == oracle.size());
        for (size_t k = 0; k < found.size(); ++k) CHECK(found[k] == oracle[k]);
    }
}

TEST_CASE("rational_roots recovers planted roots") {
    // (2X - 3)(3X + 1)(X^2 + 1), roots 3/2 and -1/3
    Poly p = P({-3, 2}) * P({1, 3}) * P({1, 0, 1});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == FieldScalar::rational(-1, 3));
    CHECK(roots[1] == FieldScalar::rational(3, 2));

    // zero roots are picked up from the stripped X factor
    auto rz = rational_roots(P({0, 0, -12, 6}));
    REQUIRE(rz.size() == 2);
    CHECK(rz[0] == FieldScalar(0L));
    CHECK(rz[1] == FieldScalar(2L));
}

TEST_CASE("integer_primitive") {
    auto [scale, prim] = integer_primitive(P({-12, 6}).scaled(FieldScalar::rational(1, 4)));
    CHECK(prim == P({-2, 1}));
    CHECK(scale * FieldScalar::rational(-12, 4) == FieldScalar(-2L));
}

TEST_CASE("poly rendering") {
    CHECK(P({-1, 0, 1}).str() == "X^2 - 1");
    CHECK(P({1, -4, 0, 1}).str() == "X^3 - 4X + 1");
    CHECK(P({-1, -1, 1}).str() == "X^2 - X - 1");
    CHECK(Poly(Q).str() == "0");
    CHECK(P({0, 2}).scaled(FieldScalar::rational(1, 4)).str() == "(1/2)X");
}
