#pragma once

// Rational functions over Q(i) in canonical form (coprime, monic
// denominator), plus local data at points of P^1: order, truncated Laurent
// expansion and residue.  The point at infinity is handled through the
// coordinate w = 1/z.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kn/polynomial.hpp"

namespace kn {

// A point of the Riemann sphere: either a finite Gaussian rational or the
// point at infinity.
class ExtendedPoint {
  public:
    ExtendedPoint() : finite_(GaussianRational(0)) {}
    explicit ExtendedPoint(GaussianRational z) : finite_(std::move(z)) {}
    static ExtendedPoint infinity() {
        ExtendedPoint p;
        p.finite_.reset();
        return p;
    }

    bool is_infinity() const { return !finite_.has_value(); }
    const GaussianRational& value() const {
        if (is_infinity()) throw domain_error("finite value of the point at infinity");
        return *finite_;
    }

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return *a.finite_ == *b.finite_;
    }
    friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) { return !(a == b); }

    std::string str() const { return is_infinity() ? "inf" : finite_->str(); }

  private:
    std::optional<GaussianRational> finite_;
};

// Truncated Laurent expansion in the local coordinate t at a point: t = z - P
// for finite P, t = 1/z at infinity.  Coefficients are exact and complete for
// all exponents <= known_through.
class LaurentSeries {
  public:
    LaurentSeries(ExtendedPoint at, long known_through)
        : at_(std::move(at)), known_through_(known_through) {}

    const ExtendedPoint& at() const { return at_; }
    long known_through() const { return known_through_; }

    void set(long e, GaussianRational c) {
        if (!c.is_zero()) coeffs_[e] = std::move(c);
    }
    // Coefficient of t^e; exact for e <= known_through, error beyond.
    const GaussianRational& coeff(long e) const;

    bool is_zero() const { return coeffs_.empty(); }
    // Order of the series (smallest exponent with nonzero coefficient);
    // meaningful only if nonzero within the truncation.
    long order() const;

    const std::map<long, GaussianRational>& coeffs() const { return coeffs_; }

  private:
    ExtendedPoint at_;
    long known_through_;
    std::map<long, GaussianRational> coeffs_;
};

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}
    explicit RationalFunction(GaussianRational c)
        : num_(Polynomial(std::move(c))), den_(Polynomial::one()) {}

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(Polynomial::one()); }
    // the coordinate function z
    static RationalFunction z() { return RationalFunction(Polynomial::monomial(GaussianRational(1), 1)); }
    // (z - a)^e for any integer e
    static RationalFunction linear_power(const GaussianRational& a, long e);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator*(const GaussianRational& c, RationalFunction f);

    // Canonical form makes this true structural equality of functions.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const;
    RationalFunction pow(long e) const;

    // Evaluation at a finite point that is not a pole.
    GaussianRational eval(const GaussianRational& z) const;

    std::string str(const std::string& var = "z") const;

  private:
    void canonicalize();
    Polynomial num_;
    Polynomial den_;
};

// Order of vanishing at P (negative at poles); std::nullopt encodes +infinity,
// which happens exactly for the zero function.
std::optional<long> order_at(const RationalFunction& f, const ExtendedPoint& P);

// Laurent expansion of f in the local coordinate at P, complete through
// t^through.
LaurentSeries local_expansion(const RationalFunction& f, const ExtendedPoint& P, long through);

// Residue of the 1-form f dz at P.  At infinity this is minus the z^{-1}
// coefficient of the expansion of f, so that the residues of a rational
// 1-form over all of P^1 sum to zero.
GaussianRational residue_at(const RationalFunction& f, const ExtendedPoint& P);

// Schwarzian derivative h'''/h' - (3/2)(h''/h')^2; h must be non-constant.
RationalFunction schwarzian_derivative(const RationalFunction& h);

// f(g(z)); the substituted value must not be identically a pole of f.
RationalFunction compose(const RationalFunction& f, const RationalFunction& g);

}  // namespace kn
