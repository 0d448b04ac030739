#pragma once

// Dense univariate polynomials over Q(i).  Invariant: the coefficient vector
// is either empty (the zero polynomial) or has a nonzero last entry, so
// degree() is just size()-1 and equality is structural.

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kn/rational.hpp"

namespace kn {

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(GaussianRational c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<GaussianRational> coeffs)
        : coeffs_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(GaussianRational(1)); }
    // the monomial c*z^e
    static Polynomial monomial(GaussianRational c, std::size_t e);
    // z - a
    static Polynomial linear_root(const GaussianRational& a);
    static Polynomial from_coeff_map(const std::map<long, GaussianRational>& m);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // Degree of the zero polynomial is undefined; callers check is_zero().
    long degree() const;

    const GaussianRational& leading() const;
    // Coefficient of z^e (zero outside the stored range).
    const GaussianRational& coeff(std::size_t e) const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, Polynomial p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division; den must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
    // Exact quotient; throws if the division leaves a remainder.
    static Polynomial exact_div(const Polynomial& num, const Polynomial& den);

    // Monic gcd (gcd(0,0) = 0).
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial derivative() const;
    GaussianRational eval(const GaussianRational& z) const;

    // p(z + c) by repeated synthetic division, exact.
    Polynomial shift(const GaussianRational& c) const;
    // Coefficients reversed: z^deg * p(1/z).  Used for expansions at infinity.
    Polynomial reversed() const;

    Polynomial monic() const;
    Polynomial pow(unsigned long e) const;

    // Multiplicity of the root a (0 when p(a) != 0); p must be nonzero.
    long root_multiplicity(const GaussianRational& a) const;

    std::string str(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

}  // namespace kn
