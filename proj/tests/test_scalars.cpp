#include <doctest.h>

#include "kn/half_integer.hpp"
#include "kn/rational.hpp"

using namespace kn;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(2, 4);
    CHECK(a.str() == "1/2");
    CHECK(a + Rational(1, 2) == Rational(1));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 7).pow(-2) == Rational(49));
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK_THROWS_AS(Rational(1, 0), zero_division);
    CHECK_THROWS_AS(Rational(1) / Rational(0), zero_division);
}

TEST_CASE("rational parsing round trips") {
    for (const char* s : {"0", "1", "-1", "5/3", "-22/7", "1000000000000/7"}) {
        Rational r = Rational::parse(s);
        CHECK(Rational::parse(r.str()) == r);
        CHECK(r.str() == s);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("a/b"), parse_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), zero_division);
    CHECK_THROWS_AS(Rational::parse(""), parse_error);
}

TEST_CASE("gaussian rationals divide exactly") {
    GaussianRational one_plus(Rational(1), Rational(1));
    GaussianRational one_minus(Rational(1), Rational(-1));
    // (1+i)/(1-i) = i
    CHECK(one_plus / one_minus == GaussianRational::i());
    CHECK(one_plus * one_minus == GaussianRational(2));
    CHECK(GaussianRational::i().pow(4) == GaussianRational(1));
    CHECK(GaussianRational::i().inverse() == -GaussianRational::i());
    GaussianRational z(Rational(3, 2), Rational(-5, 7));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK_THROWS_AS(GaussianRational().inverse(), zero_division);
}

TEST_CASE("gaussian rational strings parse back") {
    for (const char* s : {"0", "2/3", "-1/2+3*I", "1-1*I", "I", "-I", "3/4*I", "-5", "1/2-2/3*I"}) {
        GaussianRational z = GaussianRational::parse(s);
        CHECK(GaussianRational::parse(z.str()) == z);
    }
    CHECK(GaussianRational::parse("1+1*I") == GaussianRational(Rational(1), Rational(1)));
}

TEST_CASE("half integers track parity") {
    HalfInteger h = HalfInteger::from_twice(3);  // 3/2
    CHECK(h.str() == "3/2");
    CHECK(!h.is_integer());
    CHECK((h + h).is_integer());
    CHECK((h + h).to_integer() == 3);
    CHECK(HalfInteger::parse("-5/2") == HalfInteger::from_twice(-5));
    CHECK(HalfInteger::parse("4") == HalfInteger(4));
    CHECK_THROWS_AS(h.to_integer(), domain_error);
    CHECK(h.to_rational() == Rational(3, 2));
    CHECK(-h == HalfInteger::from_twice(-3));
    CHECK(3 * h == HalfInteger::from_twice(9));
    CHECK(h * h == Rational(9, 4));
}

TEST_CASE("degree sets respect the weight parity") {
    // J_lambda = {n : n - lambda integral}
    CHECK(in_degree_set(HalfInteger(2), HalfInteger(0)));
    CHECK(!in_degree_set(HalfInteger::from_twice(3), HalfInteger(0)));
    CHECK(in_degree_set(HalfInteger::from_twice(3), HalfInteger::from_twice(-1)));

    auto r = degree_range(HalfInteger::from_twice(-1), HalfInteger(-2), HalfInteger(2));
    REQUIRE(r.size() == 4);
    CHECK(r.front() == HalfInteger::from_twice(-3));
    CHECK(r.back() == HalfInteger::from_twice(3));

    auto z = degree_range(HalfInteger(0), HalfInteger(-1), HalfInteger(1));
    REQUIRE(z.size() == 3);
    CHECK(z[1] == HalfInteger(0));
}
