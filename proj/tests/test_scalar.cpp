#include <random>

#include "doctest.h"
#include "somoscf/scalar.hpp"

using namespace somoscf;

TEST_CASE("rational normalization") {
    CHECK(FieldScalar::rational(6, -4).str() == "-3/2");
    CHECK(FieldScalar::rational(0, 5).str() == "0");
    CHECK(FieldScalar::rational(2, 2).str() == "1");
    CHECK(FieldScalar::rational(-9, -6).str() == "3/2");
    CHECK_THROWS_AS(FieldScalar::rational(1, 0), invalid_scalar_error);
}

TEST_CASE("canonical text round-trips") {
    for (const char* s : {"0", "1", "-1", "-3/2", "22/7", "123456789123456789123456789"}) {
        CHECK(FieldScalar::parse(s).str() == s);
    }
    CHECK(FieldScalar::parse(" 6/4 ").str() == "3/2");
    CHECK(FieldScalar::parse("5 mod 10007").str() == "5 mod 10007");
    CHECK(FieldScalar::parse("-1 mod 7").str() == "6 mod 7");
    CHECK(FieldScalar::parse("12 mod 7").str() == "5 mod 7");
    CHECK_THROWS_AS(FieldScalar::parse(""), invalid_scalar_error);
    CHECK_THROWS_AS(FieldScalar::parse("1.5"), invalid_scalar_error);
    CHECK_THROWS_AS(FieldScalar::parse("x"), invalid_scalar_error);
    CHECK_THROWS_AS(FieldScalar::parse("1/0"), invalid_scalar_error);
    CHECK_THROWS_AS(FieldScalar::parse("1 mod 4"), invalid_scalar_error);
    CHECK_THROWS_AS(FieldScalar::parse("1 mod 3"), invalid_scalar_error);
}

TEST_CASE("fields never mix") {
    FieldScalar q(2L);
    FieldScalar p = FieldScalar::mod_p(2, 7);
    CHECK_THROWS_AS((void)(q + p), field_mismatch_error);
    CHECK_THROWS_AS((void)(q == p), field_mismatch_error);
}

TEST_CASE("prime field construction") {
    CHECK_THROWS_AS(prime_field(4), invalid_scalar_error);
    CHECK_THROWS_AS(prime_field(3), invalid_scalar_error);
    CHECK_THROWS_AS(prime_field(10006), invalid_scalar_error);
    CHECK(prime_field(10007).p == 10007);
    CHECK(FieldScalar::mod_p(-3, 10007).str() == "10004 mod 10007");
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 20);
    Field fp = prime_field(101);

    auto draw = [&](bool rational) {
        if (rational) return FieldScalar::rational(num(rng), den(rng));
        return FieldScalar::of(fp, num(rng));
    };
    for (bool rational : {true, false}) {
        for (int i = 0; i < 300; ++i) {
            FieldScalar a = draw(rational), b = draw(rational), c = draw(rational);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + (-a) == FieldScalar::of(a.field(), 0));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == FieldScalar::of(a.field(), 1));
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("division and inverse reject zero") {
    CHECK_THROWS_AS(FieldScalar(0L).inverse(), zero_division_error);
    CHECK_THROWS_AS((void)(FieldScalar(1L) / FieldScalar(0L)), zero_division_error);
    CHECK_THROWS_AS(FieldScalar::mod_p(0, 7).inverse(), zero_division_error);
}

TEST_CASE("rational square roots") {
    CHECK(rational_sqrt(FieldScalar::parse("9/4"))->str() == "3/2");
    CHECK(rational_sqrt(FieldScalar(1L))->str() == "1");
    CHECK(rational_sqrt(FieldScalar(0L))->str() == "0");
    CHECK(!rational_sqrt(FieldScalar(2L)).has_value());
    CHECK(!rational_sqrt(FieldScalar(-4L)).has_value());
    CHECK(!rational_sqrt(FieldScalar::parse("4/3")).has_value());
}

TEST_CASE("integrality flag") {
    CHECK(FieldScalar::parse("3").is_integer());
    CHECK(!FieldScalar::parse("3/4").is_integer());
    CHECK(FieldScalar::mod_p(5, 7).is_integer());
}
