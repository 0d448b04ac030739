#include "kn/rational_function.hpp"

#include <vector>

namespace kn {

const GaussianRational& LaurentSeries::coeff(long e) const {
    if (e > known_through_)
        throw domain_error("Laurent coefficient beyond the computed truncation");
    static const GaussianRational kZero{};
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? kZero : it->second;
}

long LaurentSeries::order() const {
    if (coeffs_.empty())
        throw domain_error("order of a series with no nonzero computed coefficient");
    return coeffs_.begin()->first;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw zero_division("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = Polynomial::exact_div(num_, g);
        den_ = Polynomial::exact_div(den_, g);
    }
    GaussianRational lead = den_.leading();
    if (!(lead == GaussianRational(1))) {
        GaussianRational inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::linear_power(const GaussianRational& a, long e) {
    Polynomial lin = Polynomial::linear_root(a);
    if (e >= 0) return RationalFunction(lin.pow(static_cast<unsigned long>(e)));
    return RationalFunction(Polynomial::one(), lin.pow(static_cast<unsigned long>(-e)));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw zero_division("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

RationalFunction operator*(const GaussianRational& c, RationalFunction f) {
    f.num_ = c * f.num_;
    if (f.num_.is_zero()) f.den_ = Polynomial::one();
    return f;
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2; canonicalization removes the common factors.
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(std::move(n), den_ * den_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return one();
    if (is_zero()) {
        if (e < 0) throw zero_division("zero rational function to a negative power");
        return zero();
    }
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    RationalFunction base = e < 0 ? one() / *this : *this;
    RationalFunction acc = one();
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

GaussianRational RationalFunction::eval(const GaussianRational& z) const {
    GaussianRational d = den_.eval(z);
    if (d.is_zero()) throw domain_error("evaluation at a pole");
    return num_.eval(z) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Polynomial::one()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::optional<long> order_at(const RationalFunction& f, const ExtendedPoint& P) {
    if (f.is_zero()) return std::nullopt;
    if (P.is_infinity()) {
        // In w = 1/z the order at w=0 is deg(den) - deg(num); num and den
        // are coprime so no cancellation can shift this.
        return f.den().degree() - f.num().degree();
    }
    const GaussianRational& a = P.value();
    long up = f.num().root_multiplicity(a);
    long down = f.den().root_multiplicity(a);
    return up - down;
}

namespace {

// Coefficients [t^0 .. t^n] of u/v as power series, v(0) != 0.
std::vector<GaussianRational> series_quotient(const std::vector<GaussianRational>& u,
                                              const std::vector<GaussianRational>& v,
                                              std::size_t n) {
    std::vector<GaussianRational> w(n + 1);
    GaussianRational inv0 = v[0].inverse();
    for (std::size_t k = 0; k <= n; ++k) {
        GaussianRational acc = k < u.size() ? u[k] : GaussianRational(0);
        for (std::size_t j = 1; j <= k && j < v.size(); ++j) acc -= v[j] * w[k - j];
        w[k] = acc * inv0;
    }
    return w;
}

LaurentSeries expand_at_origin(const Polynomial& num, const Polynomial& den,
                               const ExtendedPoint& tag, long through) {
    LaurentSeries s(tag, through);
    if (num.is_zero()) return s;
    // Pull out powers of t so that both parts are units at t=0.
    std::vector<GaussianRational> u = num.coeffs();
    std::vector<GaussianRational> v = den.coeffs();
    long a = 0, b = 0;
    while (u[0].is_zero()) {
        u.erase(u.begin());
        ++a;
    }
    while (v[0].is_zero()) {
        v.erase(v.begin());
        ++b;
    }
    long base = a - b;  // order of the function at the point
    if (through < base) return s;
    std::size_t need = static_cast<std::size_t>(through - base);
    std::vector<GaussianRational> w = series_quotient(u, v, need);
    for (std::size_t k = 0; k < w.size(); ++k)
        s.set(base + static_cast<long>(k), std::move(w[k]));
    return s;
}

}  // namespace

LaurentSeries local_expansion(const RationalFunction& f, const ExtendedPoint& P, long through) {
    if (f.is_zero()) return LaurentSeries(P, through);
    if (P.is_infinity()) {
        // Substitute z = 1/w: f(1/w) = w^{deg den - deg num} * rev(num)/rev(den),
        // and the reversed polynomials do not vanish at w = 0.
        Polynomial rn = f.num().reversed();
        Polynomial rd = f.den().reversed();
        long shift = f.den().degree() - f.num().degree();
        LaurentSeries inner = expand_at_origin(rn, rd, P, through - shift);
        LaurentSeries out(P, through);
        for (const auto& [e, c] : inner.coeffs()) out.set(e + shift, c);
        return out;
    }
    return expand_at_origin(f.num().shift(P.value()), f.den().shift(P.value()), P, through);
}

GaussianRational residue_at(const RationalFunction& f, const ExtendedPoint& P) {
    if (f.is_zero()) return GaussianRational(0);
    if (P.is_infinity()) {
        // res_inf(f dz) = -[w^1](f(1/w)) because dz = -w^{-2} dw.
        auto ord = order_at(f, P);
        if (*ord > 1) return GaussianRational(0);
        return -local_expansion(f, P, 1).coeff(1);
    }
    auto ord = order_at(f, P);
    if (*ord >= 0) return GaussianRational(0);
    return local_expansion(f, P, -1).coeff(-1);
}

RationalFunction compose(const RationalFunction& f, const RationalFunction& g) {
    auto poly_at = [&g](const Polynomial& p) {
        RationalFunction acc;
        for (std::size_t k = p.coeffs().size(); k-- > 0;)
            acc = acc * g + RationalFunction(p.coeffs()[k]);
        return acc;
    };
    RationalFunction d = poly_at(f.den());
    if (d.is_zero()) throw zero_division("composition lands identically in a pole");
    return poly_at(f.num()) / d;
}

RationalFunction schwarzian_derivative(const RationalFunction& h) {
    RationalFunction h1 = h.derivative();
    if (h1.is_zero()) throw domain_error("Schwarzian derivative of a constant");
    RationalFunction h2 = h1.derivative();
    RationalFunction h3 = h2.derivative();
    RationalFunction q = h2 / h1;
    return h3 / h1 - GaussianRational(Rational(3, 2)) * (q * q);
}

}  // namespace kn
