#include "kn/polynomial.hpp"

#include <sstream>

namespace kn {

namespace {
const GaussianRational kZero{};
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(GaussianRational c, std::size_t e) {
    if (c.is_zero()) return zero();
    std::vector<GaussianRational> v(e + 1);
    v[e] = std::move(c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const GaussianRational& a) {
    return Polynomial{-a, GaussianRational(1)};
}

Polynomial Polynomial::from_coeff_map(const std::map<long, GaussianRational>& m) {
    Polynomial out;
    for (const auto& [e, c] : m) {
        if (e < 0) throw domain_error("negative exponent in polynomial data");
        out += monomial(c, static_cast<std::size_t>(e));
    }
    return out;
}

long Polynomial::degree() const {
    if (is_zero()) throw domain_error("degree of the zero polynomial");
    return static_cast<long>(coeffs_.size()) - 1;
}

const GaussianRational& Polynomial::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const GaussianRational& Polynomial::coeff(std::size_t e) const {
    if (e >= coeffs_.size()) return kZero;
    return coeffs_[e];
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const GaussianRational& c, Polynomial p) {
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw zero_division("polynomial division by zero");
    if (num.is_zero() || num.coeffs_.size() < den.coeffs_.size())
        return {zero(), num};
    std::vector<GaussianRational> rem = num.coeffs_;
    std::size_t dn = den.coeffs_.size();
    std::vector<GaussianRational> quot(rem.size() - dn + 1);
    GaussianRational inv_lead = den.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        GaussianRational q = rem[k + dn - 1] * inv_lead;
        if (q.is_zero()) continue;
        quot[k] = q;
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * den.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw domain_error("polynomial division is not exact");
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    // Normalized Euclid; keeping remainders monic tames coefficient growth.
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<GaussianRational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = GaussianRational(Rational(static_cast<long>(k))) * coeffs_[k];
    return Polynomial(std::move(out));
}

GaussianRational Polynomial::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

Polynomial Polynomial::shift(const GaussianRational& c) const {
    // Repeated synthetic division of p by (t - (-c)) collects the Taylor
    // coefficients of p(t + c) from lowest to highest.
    std::vector<GaussianRational> work = coeffs_;
    std::vector<GaussianRational> out(coeffs_.size());
    for (std::size_t round = 0; round < coeffs_.size(); ++round) {
        GaussianRational carry;
        for (std::size_t k = work.size(); k-- > 0;) {
            GaussianRational next = work[k] + carry * c;
            work[k] = next;
            carry = next;
        }
        out[round] = work[0];
        work.erase(work.begin());
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed() const {
    std::vector<GaussianRational> out(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw domain_error("monic of the zero polynomial");
    return leading().inverse() * *this;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial acc = one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

long Polynomial::root_multiplicity(const GaussianRational& a) const {
    if (is_zero()) throw domain_error("root multiplicity in the zero polynomial");
    long mult = 0;
    Polynomial p = *this;
    Polynomial lin = linear_root(a);
    while (true) {
        auto [q, r] = divmod(p, lin);
        if (!r.is_zero()) break;
        ++mult;
        p = std::move(q);
    }
    return mult;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        if (k == 1) os << "*" << var;
        if (k > 1) os << "*" << var << "^" << k;
    }
    return os.str();
}

}  // namespace kn
