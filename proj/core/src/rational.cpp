#include "kn/rational.hpp"

#include <ostream>

namespace kn {

Rational::Rational(long num, long den) {
    if (den == 0) throw zero_division("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw zero_division();
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    mpq_class v;
    // mpq_class::set_str accepts "num/den"; validate characters first since
    // GMP is lenient about whitespace.
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (c == ' ') continue;
        if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/') {
            t.push_back(c);
        } else {
            throw parse_error("bad character in rational literal: " + s);
        }
    }
    // GMP accepts an optional leading '-' but not '+'
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (v.set_str(t, 10) != 0) throw parse_error("unparsable rational literal: " + s);
    if (v.get_den() == 0) throw zero_division("rational literal with zero denominator: " + s);
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw zero_division("zero to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / *this : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

long Rational::to_long() const {
    if (!is_integer()) throw domain_error("to_long on non-integer rational " + str());
    if (!v_.get_num().fits_slong_p()) throw domain_error("rational too large for long: " + str());
    return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    Rational n2 = norm2();
    if (n2.is_zero()) throw zero_division();
    return {re_ / n2, -im_ / n2};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const {
    if (e == 0) return GaussianRational(1);
    GaussianRational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string out = re_.str();
    out += im_.sign() < 0 ? '-' : '+';
    out += im_.abs().str();
    out += "*I";
    return out;
}

GaussianRational GaussianRational::parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty scalar literal");
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (c != ' ') t.push_back(c);

    auto star = t.find("*I");
    if (star == std::string::npos) {
        if (t.find('I') != std::string::npos) {
            // allow bare "I" / "-I"
            if (t == "I") return i();
            if (t == "-I") return -i();
            throw parse_error("unparsable scalar literal: " + s);
        }
        return GaussianRational(Rational::parse(t));
    }
    if (star + 2 != t.size()) throw parse_error("unparsable scalar literal: " + s);
    std::string body = t.substr(0, star);
    // Split off the imaginary coefficient: last '+' or '-' that is not a
    // leading sign and not inside "/..." digits (signs only occur at the
    // start or between the two parts, exponents are not part of the syntax).
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary "c/d*I"
        return GaussianRational(Rational(0), Rational::parse(body));
    }
    Rational re = Rational::parse(body.substr(0, split));
    std::string imtxt = body.substr(split);  // keeps the sign
    if (imtxt == "+") imtxt = "1";
    if (imtxt == "-") imtxt = "-1";
    return GaussianRational(re, Rational::parse(imtxt));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

bool key_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

}  // namespace kn
