#include <random>

#include "doctest.h"
#include "somoscf/somos.hpp"
#include "somoscf/verify.hpp"

using namespace somoscf;

namespace {

FieldScalar S(const char* text) { return FieldScalar::parse(text); }

CurveParams example_curve() { return CurveParams::reduced(S("-4"), S("1"), S("-1"), S("2")); }

NormalLine example_seed() { return NormalLine{0, S("2"), S("-1/2"), S("1"), S("0"), S("-1")}; }

std::vector<FieldScalar> scalars(std::initializer_list<const char*> texts) {
    std::vector<FieldScalar> out;
    for (const char* t : texts) out.push_back(S(t));
    return out;
}

SomosWindow example_window() {
    // T_{-1} .. T_11 of the running example
    SomosWindow w;
    w.offset = -1;
    w.terms = scalars({"2", "1", "1", "1", "1", "1", "1", "2", "3", "4", "8", "17", "50"});
    w.coeffs = std::make_pair(S("1"), S("1"));
    return w;
}

}  // namespace

TEST_CASE("gap-6 coefficients") {
    auto [a, b] = gap6_coeffs(example_curve());
    CHECK(a == S("1"));
    CHECK(b == S("1"));

    // g + wf + w^3 = 0 kills b
    auto [a2, b2] = gap6_coeffs(CurveParams::reduced(S("1"), S("-2"), S("1"), S("1")));
    CHECK(a2 == S("1"));
    CHECK(b2.is_zero());

    auto [a3, b3] = gap6_coeffs(CurveParams::reduced(S("1"), S("1"), S("2"), S("1")));
    CHECK(a3 == S("4"));
    CHECK(b3 == S("-24"));

    CHECK_THROWS_AS(gap6_coeffs(CurveParams::full(S("1"), S("1"), S("1"), S("1"), S("1"))),
                    unsupported_error);
}

TEST_CASE("d-stream of the example") {
    auto d = d_stream(example_curve(), example_seed(), 0, 6);
    auto want = scalars({"2", "1", "1", "1", "1", "2", "3/4"});
    REQUIRE(d.size() == want.size());
    for (size_t i = 0; i < d.size(); ++i) CHECK(d[i] == want[i]);

    auto single = d_stream(example_curve(), example_seed(), 0, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == S("2"));

    auto back = d_stream(example_curve(), example_seed(), -1, 0);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == S("3/4"));
    CHECK(back[1] == S("2"));

    CHECK_THROWS_AS(d_stream(example_curve(), example_seed(), 3, 6), std::invalid_argument);
}

TEST_CASE("sequence from the d-stream") {
    // d_1..d_6 produce T_0..T_7
    auto d = scalars({"1", "1", "1", "1", "2", "3/4"});
    SomosWindow w = somos_from_d(d, 1, S("1"), S("1"));
    CHECK(w.offset == 0);
    auto want = scalars({"1", "1", "1", "1", "1", "1", "2", "3"});
    REQUIRE(w.terms.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(w.terms[i] == want[i]);

    // all-ones fixed point
    SomosWindow ones = somos_from_d(scalars({"1", "1", "1"}), 0, S("1"), S("1"));
    for (const auto& t : ones.terms) CHECK(t == S("1"));

    // gauge: T_first = 3, T_second = 6 multiplies the example by 3*2^h
    SomosWindow g = somos_from_d(d, 1, S("3"), S("6"));
    FieldScalar three(3L), two(2L);
    for (size_t i = 0; i < want.size(); ++i) {
        CHECK(g.terms[i] == three * two.pow(static_cast<unsigned>(i)) * want[i]);
    }

    CHECK_THROWS_AS(somos_from_d(scalars({"0"}), 0, S("1"), S("1")), singular_error);
    CHECK_THROWS_AS(somos_from_d(d, 1, S("0"), S("1")), singular_error);
}

TEST_CASE("d recovery from terms") {
    SomosWindow w = example_window();
    CHECK(d_from_terms(w, 0) == S("2"));
    CHECK(d_from_terms(w, 6) == S("3/4"));  // T_5 T_7 / T_6^2 = 3/4
    CHECK_THROWS_AS(d_from_terms(w, -1), std::invalid_argument);
}

TEST_CASE("gap-6 check") {
    CHECK(gap6_check(example_window()).empty());

    SomosWindow bad = example_window();
    bad.terms.back() = S("51");
    auto v = gap6_check(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == 8);

    SomosWindow shorty{0, scalars({"1", "1", "1", "1", "1", "1"}), std::make_pair(S("1"), S("1"))};
    CHECK(gap6_check(shorty).empty());
}

TEST_CASE("gap-6 extension") {
    SomosWindow six{0, scalars({"1", "1", "1", "1", "1", "1"}), std::make_pair(S("1"), S("1"))};
    SomosWindow fwd = gap6_extend(six, 6, ExtendDirection::Forward);
    auto want = scalars({"1", "1", "1", "1", "1", "1", "2", "3", "4", "8", "17", "50"});
    REQUIRE(fwd.terms.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(fwd.terms[i] == want[i]);

    SomosWindow back = gap6_extend(six, 1, ExtendDirection::Backward);
    CHECK(back.offset == -1);
    CHECK(back.terms.front() == S("2"));

    CHECK(gap6_extend(six, 0, ExtendDirection::Forward).terms == six.terms);

    SomosWindow zeroed{0, scalars({"0", "1", "1", "1", "1", "1"}), std::make_pair(S("1"), S("1"))};
    CHECK_THROWS_AS(gap6_extend(zeroed, 1, ExtendDirection::Forward), singular_error);
    SomosWindow five{0, scalars({"1", "1", "1", "1", "1"}), std::make_pair(S("1"), S("1"))};
    CHECK_THROWS_AS(gap6_extend(five, 1, ExtendDirection::Forward), std::invalid_argument);
}

TEST_CASE("theorem reproduction on random reduced instances") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        auto [curve, line] = random_instance(seed, CurveMode::Reduced, 3);
        auto lines = stepped_window(curve, line, 12);
        std::string detail;
        CHECK_MESSAGE(theorem_reproduction(curve, lines, &detail), "seed ", seed, ": ", detail);
    }
}

TEST_CASE("gauge invariance of the d-stream and the gap-6 verdict") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<long> pick(1, 7);
    for (std::uint64_t seed = 300; seed < 310; ++seed) {
        auto [curve, line] = random_instance(seed, CurveMode::Reduced, 3);
        auto lines = stepped_window(curve, line, 9);
        if (lines.size() < 8) continue;
        std::vector<FieldScalar> d;
        for (size_t i = 1; i < lines.size(); ++i) d.push_back(lines[i].d);
        FieldScalar one(1L);
        FieldScalar alpha(pick(rng)), beta(pick(rng));
        SomosWindow base = somos_from_d(d, lines.front().h + 1, one, one);
        SomosWindow scaled = somos_from_d(d, lines.front().h + 1, alpha, alpha * beta);
        base.coeffs = scaled.coeffs = gap6_coeffs(curve);
        // term-wise ratio is alpha * beta^h and the d's recompute identically
        for (long long h = base.first_index(); h <= base.last_index(); ++h) {
            unsigned k = static_cast<unsigned>(h - base.first_index());
            CHECK(scaled.term(h) == alpha * beta.pow(k) * base.term(h));
        }
        for (long long h = base.first_index() + 1; h < base.last_index(); ++h) {
            CHECK(d_from_terms(base, h) == d_from_terms(scaled, h));
            CHECK(d_from_terms(base, h) == d[static_cast<size_t>(h - base.first_index() - 1)]);
        }
        CHECK(gap6_check(base) == gap6_check(scaled));
    }
}

TEST_CASE("quintuple product identity times T_h^2 is the gap-6 instance") {
    for (std::uint64_t seed = 400; seed < 408; ++seed) {
        auto [curve, line] = random_instance(seed, CurveMode::Reduced, 3);
        auto lines = stepped_window(curve, line, 10);
        if (lines.size() < 7) continue;
        std::vector<FieldScalar> d;
        for (size_t i = 1; i < lines.size(); ++i) d.push_back(lines[i].d);
        FieldScalar one(1L);
        SomosWindow win = somos_from_d(d, lines.front().h + 1, one, one);
        auto [a, b] = gap6_coeffs(curve);
        auto dat = [&](long long h) { return d_from_terms(win, h); };
        for (long long h = win.first_index() + 3; h + 3 <= win.last_index(); ++h) {
            FieldScalar T = win.term(h);
            FieldScalar lhs = dat(h - 2) * dat(h - 1).pow(2) * dat(h).pow(3) * dat(h + 1).pow(2) * dat(h + 2);
            CHECK(lhs * T * T == win.term(h - 3) * win.term(h + 3));
            FieldScalar mid = dat(h - 1) * dat(h).pow(2) * dat(h + 1);
            CHECK(a * mid * T * T == a * win.term(h - 2) * win.term(h + 2));
        }
    }
}
