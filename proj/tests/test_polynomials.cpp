#include <doctest.h>

#include "kn/polynomial.hpp"

using namespace kn;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }
Polynomial zpow(long e) { return Polynomial::monomial(q(1), static_cast<std::size_t>(e)); }
}  // namespace

TEST_CASE("polynomial arithmetic trims and evaluates") {
    Polynomial p = zpow(2) + q(3) * zpow(1) + Polynomial(q(2));
    CHECK(p.degree() == 2);
    CHECK(p.eval(q(2)) == q(12));  // 4 + 6 + 2
    Polynomial zero = p - p;
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.degree(), domain_error);
    CHECK((p * zero).is_zero());
    CHECK(p.coeff(1) == q(3));
    CHECK(p.coeff(17) == q(0));
}

TEST_CASE("division with remainder is exact") {
    Polynomial num = zpow(5) + q(-1) * Polynomial::one();  // z^5 - 1
    Polynomial den = zpow(1) + q(-1) * Polynomial::one();  // z - 1
    auto [quo, rem] = Polynomial::divmod(num, den);
    CHECK(rem.is_zero());
    CHECK(quo == zpow(4) + zpow(3) + zpow(2) + zpow(1) + Polynomial::one());
    CHECK(quo * den == num);

    auto [q2, r2] = Polynomial::divmod(zpow(2), zpow(1) + Polynomial::one());
    CHECK(q2 == zpow(1) - Polynomial::one());
    CHECK(r2 == Polynomial::one());
    CHECK_THROWS_AS(Polynomial::divmod(num, num - num), zero_division);
    CHECK(Polynomial::exact_div(num, den) == quo);
    CHECK_THROWS_AS(Polynomial::exact_div(zpow(2), zpow(1) + Polynomial::one()), domain_error);
}

TEST_CASE("gcd is monic and correct") {
    Polynomial a = Polynomial::linear_root(q(1)) * Polynomial::linear_root(q(2));
    Polynomial b = Polynomial::linear_root(q(1)) * Polynomial::linear_root(q(3));
    CHECK(Polynomial::gcd(a, b) == Polynomial::linear_root(q(1)));
    CHECK(Polynomial::gcd(a, Polynomial()) == a.monic());
    Polynomial c = q(7) * (Polynomial::linear_root(q(1)).pow(2));
    CHECK(Polynomial::gcd(c, c).leading() == q(1));
}

TEST_CASE("derivative and Taylor shift") {
    Polynomial p = zpow(3) + q(2) * zpow(1);
    CHECK(p.derivative() == q(3) * zpow(2) + q(2) * Polynomial::one());
    // p(z+1) = (z+1)^3 + 2(z+1) = z^3 + 3z^2 + 5z + 3
    Polynomial s = p.shift(q(1));
    CHECK(s == zpow(3) + q(3) * zpow(2) + q(5) * zpow(1) + q(3) * Polynomial::one());
    // shifting back restores the original
    CHECK(s.shift(q(-1)) == p);
}

TEST_CASE("root multiplicity counts factors") {
    Polynomial p = Polynomial::linear_root(q(2)).pow(3) * Polynomial::linear_root(q(-1));
    CHECK(p.root_multiplicity(q(2)) == 3);
    CHECK(p.root_multiplicity(q(-1)) == 1);
    CHECK(p.root_multiplicity(q(0)) == 0);
}

TEST_CASE("coefficient maps round trip") {
    std::map<long, GaussianRational> m{{0, q(1, 2)}, {5, q(-3)}};
    Polynomial p = Polynomial::from_coeff_map(m);
    CHECK(p.degree() == 5);
    CHECK(p.coeff(0) == q(1, 2));
    CHECK(p.coeff(5) == q(-3));
    CHECK(p.coeff(2).is_zero());
}
