#pragma once

// Half-integers stored as twice their value, so weights like -1/2 and degree
// sets J_lambda = Z or Z + 1/2 stay exact without touching GMP.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kn/errors.hpp"
#include "kn/rational.hpp"

namespace kn {

class HalfInteger {
  public:
    constexpr HalfInteger() : twice_(0) {}
    constexpr HalfInteger(long n) : twice_(2 * n) {}  // NOLINT: implicit Z -> (1/2)Z

    static constexpr HalfInteger from_twice(std::int64_t t) {
        HalfInteger h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInteger half() { return from_twice(1); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    // Throws unless the value is an actual integer.
    std::int64_t to_integer() const {
        if (!is_integer()) throw domain_error("half-integer " + str() + " is not an integer");
        return twice_ / 2;
    }

    Rational to_rational() const { return Rational(twice_, 2); }

    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    constexpr HalfInteger& operator+=(HalfInteger o) { twice_ += o.twice_; return *this; }
    constexpr HalfInteger& operator-=(HalfInteger o) { twice_ -= o.twice_; return *this; }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }
    friend constexpr HalfInteger operator*(long k, HalfInteger h) { return from_twice(k * h.twice_); }

    // Product of two half-integers is in general a quarter-integer, so it
    // lives in Q.
    friend Rational operator*(HalfInteger a, HalfInteger b) { return Rational(a.twice_ * b.twice_, 4); }

    friend constexpr auto operator<=>(HalfInteger a, HalfInteger b) = default;

    // "n" for integers, "t/2" (t odd) otherwise; parse accepts both.
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }
    static HalfInteger parse(const std::string& s);

  private:
    std::int64_t twice_;
};

inline HalfInteger HalfInteger::parse(const std::string& s) {
    Rational r = Rational::parse(s);
    Rational t = r * Rational(2);
    if (!t.is_integer()) throw parse_error("not a half-integer: " + s);
    return HalfInteger::from_twice(t.to_long());
}

// The degree set J_lambda: integers for integer weight, Z + 1/2 otherwise.
// Membership means n - lambda is an integer.
inline bool in_degree_set(HalfInteger n, HalfInteger lambda) {
    return (n - lambda).is_integer();
}

// All degrees of J_lambda inside [lo, hi].
inline std::vector<HalfInteger> degree_range(HalfInteger lambda, HalfInteger lo, HalfInteger hi) {
    std::vector<HalfInteger> out;
    // First element of J_lambda that is >= lo.
    std::int64_t parity = ((lambda.twice() % 2) + 2) % 2;
    std::int64_t t = lo.twice();
    if (((t % 2) + 2) % 2 != parity) t += 1;
    for (; t <= hi.twice(); t += 2) out.push_back(HalfInteger::from_twice(t));
    return out;
}

}  // namespace kn
