#pragma once

// Exact scalar arithmetic: rationals (GMP-backed) and Gaussian rationals.
// Every value is kept in canonical form, so operator== is structural
// equality and results are reproducible bit for bit.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kn/errors.hpp"

namespace kn {

// Arbitrary-precision rational, always reduced with positive denominator.
// mpq_class maintains exactly that canonical form as long as every mutation
// goes through canonicalize(), which the constructors below guarantee.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int -> Q
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "a", "-a/b" (arbitrary precision). Throws parse_error.
    static Rational parse(const std::string& s);

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return v_ < 0 ? -*this : *this; }

    // Integer power; negative exponents invert (throw on zero base).
    Rational pow(long e) const;

    // "a" when the denominator is 1, otherwise "a/b".
    std::string str() const { return v_.get_str(); }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    const mpq_class& raw() const { return v_; }

    // Exact only when the value fits; used for small bookkeeping quantities.
    long to_long() const;
    bool is_integer() const { return v_.get_den() == 1; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element of Q(i).  Canonical since both parts are.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT: implicit Z -> Q(i)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    // Parses "a/b", "a/b+c/d*I", "a/b-c/d*I" (also tolerates a bare "c/d*I").
    static GaussianRational parse(const std::string& s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2 as a rational; zero iff z == 0.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const;
    GaussianRational pow(long e) const;

    // "a/b" for real values, "a/b+c/d*I" / "a/b-c/d*I" otherwise.
    std::string str() const;

  private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

// Total order usable as a map key (lexicographic on (re, im)); it has no
// field meaning, Q(i) is not an ordered field.
bool key_less(const GaussianRational& a, const GaussianRational& b);

}  // namespace kn
