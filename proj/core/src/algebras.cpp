#include "kn/algebras.hpp"

#include <cctype>
#include <sstream>

namespace kn {

namespace {

void require_weight(const MeromorphicForm& f, long w, const char* what) {
    if (!f.is_zero() && f.weight != HalfInteger(w))
        throw weight_mismatch(std::string(what) + " must have weight " + std::to_string(w) +
                              ", got " + f.weight.str());
}

void require_half_weight(const MeromorphicForm& f, const char* what) {
    if (!f.is_zero() && f.weight != HalfInteger::from_twice(-1))
        throw weight_mismatch(std::string(what) + " must have weight -1/2, got " + f.weight.str());
}

MeromorphicForm zero_form(long w) { return {HalfInteger(w), RationalFunction::zero()}; }
MeromorphicForm zero_half_form() {
    return {HalfInteger::from_twice(-1), RationalFunction::zero()};
}

}  // namespace

D1Element D1Element::from_function(MeromorphicForm g) {
    require_weight(g, 0, "function part");
    return {std::move(g), zero_form(-1)};
}

D1Element D1Element::from_vector_field(MeromorphicForm e) {
    require_weight(e, -1, "vector field part");
    return {zero_form(0), std::move(e)};
}

D1Element D1Element::make(MeromorphicForm g, MeromorphicForm e) {
    require_weight(g, 0, "function part");
    require_weight(e, -1, "vector field part");
    return {std::move(g), std::move(e)};
}

D1Element d1_bracket(const D1Element& x, const D1Element& y) {
    MeromorphicForm fn = form_bracket(x.vec, y.fn);
    fn.rep -= form_bracket(y.vec, x.fn).rep;
    return {std::move(fn), form_bracket(x.vec, y.vec)};
}

MeromorphicForm d1_action(const D1Element& x, const MeromorphicForm& u) {
    MeromorphicForm out = form_bracket(x.vec, u);
    out.rep += form_product(x.fn, u).rep;
    return out;
}

D1Element d1_jacobi_defect(const D1Element& a, const D1Element& b, const D1Element& c) {
    D1Element d = d1_bracket(d1_bracket(a, b), c);
    D1Element e = d1_bracket(d1_bracket(b, c), a);
    D1Element f = d1_bracket(d1_bracket(c, a), b);
    d.fn.rep += e.fn.rep + f.fn.rep;
    d.vec.rep += e.vec.rep + f.vec.rep;
    return d;
}

SuperElement SuperElement::from_even(MeromorphicForm e) {
    require_weight(e, -1, "even part");
    return {std::move(e), zero_half_form()};
}

SuperElement SuperElement::from_odd(MeromorphicForm phi) {
    require_half_weight(phi, "odd part");
    return {zero_form(-1), std::move(phi)};
}

SuperElement SuperElement::make(MeromorphicForm e, MeromorphicForm phi) {
    require_weight(e, -1, "even part");
    require_half_weight(phi, "odd part");
    return {std::move(e), std::move(phi)};
}

int SuperElement::parity() const {
    if (odd.is_zero()) return 0;
    if (even.is_zero()) return 1;
    throw domain_error("parity of a non-homogeneous element");
}

SuperElement super_bracket(const SuperElement& x, const SuperElement& y) {
    MeromorphicForm even = form_bracket(x.even, y.even);
    even.rep += form_product(x.odd, y.odd).rep;
    MeromorphicForm odd = form_bracket(x.even, y.odd);
    odd.rep -= form_bracket(y.even, x.odd).rep;
    return {std::move(even), std::move(odd)};
}

SuperElement super_jacobi_defect(const SuperElement& a, const SuperElement& b,
                                 const SuperElement& c) {
    int pa = a.parity(), pb = b.parity(), pc = c.parity();
    SuperElement t1 = super_bracket(a, super_bracket(b, c));
    SuperElement t2 = super_bracket(b, super_bracket(c, a));
    SuperElement t3 = super_bracket(c, super_bracket(a, b));
    auto signed_add = [](SuperElement& acc, const SuperElement& t, int sign) {
        if (sign > 0) {
            acc.even.rep += t.even.rep;
            acc.odd.rep += t.odd.rep;
        } else {
            acc.even.rep -= t.even.rep;
            acc.odd.rep -= t.odd.rep;
        }
    };
    SuperElement out{zero_form(-1), zero_half_form()};
    signed_add(out, t1, pa * pc % 2 ? -1 : 1);
    signed_add(out, t2, pb * pa % 2 ? -1 : 1);
    signed_add(out, t3, pc * pb % 2 ? -1 : 1);
    return out;
}

JordanElement JordanElement::from_function(MeromorphicForm g) {
    require_weight(g, 0, "function part");
    return {std::move(g), zero_half_form()};
}

JordanElement JordanElement::from_odd(MeromorphicForm phi) {
    require_half_weight(phi, "odd part");
    return {zero_form(0), std::move(phi)};
}

JordanElement jordan_product(const JordanElement& x, const JordanElement& y, bool half_mixed) {
    MeromorphicForm fn = form_product(x.fn, y.fn);
    fn.rep += form_bracket(x.odd, y.odd).rep;
    MeromorphicForm odd = form_product(x.fn, y.odd);
    odd.rep += form_product(y.fn, x.odd).rep;
    if (half_mixed) odd.rep = GaussianRational(Rational(1, 2)) * odd.rep;
    return {std::move(fn), std::move(odd)};
}

FiniteLieAlgebra FiniteLieAlgebra::from_matrices(std::string name, std::vector<QiMatrix> basis) {
    if (basis.empty()) throw domain_error("empty matrix basis");
    std::size_t n = basis[0].rows();
    for (const auto& m : basis)
        if (m.rows() != n || m.cols() != n) throw domain_error("matrix basis shape mismatch");

    FiniteLieAlgebra g;
    g.name_ = std::move(name);
    g.dim_ = basis.size();
    g.matrices_ = std::move(basis);

    // Vectorized generators as columns; commutators are expanded by solving
    // against this matrix, which also certifies linear independence.
    QiMatrix M(n * n, g.dim_);
    for (std::size_t j = 0; j < g.dim_; ++j)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) M(r * n + c, j) = g.matrices_[j](r, c);
    if (rank(M) != g.dim_) throw domain_error("matrix generators are not linearly independent");

    g.sc_.assign(g.dim_, std::vector<std::map<std::size_t, GaussianRational>>(g.dim_));
    for (std::size_t i = 0; i < g.dim_; ++i) {
        for (std::size_t j = 0; j < g.dim_; ++j) {
            QiMatrix C = g.matrices_[i] * g.matrices_[j] - g.matrices_[j] * g.matrices_[i];
            std::vector<GaussianRational> rhs(n * n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = C(r, c);
            auto sol = solve_linear(M, std::move(rhs));
            if (!sol) throw domain_error("matrix basis does not close under commutators");
            for (std::size_t k = 0; k < g.dim_; ++k)
                if (!(*sol)[k].is_zero()) g.sc_[i][j][k] = (*sol)[k];
        }
    }
    g.beta_ = QiMatrix(g.dim_, g.dim_);
    for (std::size_t i = 0; i < g.dim_; ++i)
        for (std::size_t j = 0; j < g.dim_; ++j)
            g.beta_(i, j) = (g.matrices_[i] * g.matrices_[j]).trace();
    return g;
}

FiniteLieAlgebra FiniteLieAlgebra::abelian(std::size_t dim) {
    if (dim == 0) throw domain_error("abelian algebra needs positive dimension");
    FiniteLieAlgebra g;
    g.name_ = "abelian" + std::to_string(dim);
    g.dim_ = dim;
    g.sc_.assign(dim, std::vector<std::map<std::size_t, GaussianRational>>(dim));
    // Any symmetric form is invariant here; the identity keeps the pairing
    // nondegenerate for oscillator-type extensions.
    g.beta_ = QiMatrix::identity(dim);
    return g;
}

FiniteLieAlgebra FiniteLieAlgebra::gl(std::size_t n) {
    std::vector<QiMatrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QiMatrix E(n, n);
            E(i, j) = GaussianRational(1);
            basis.push_back(std::move(E));
        }
    return from_matrices("gl" + std::to_string(n), std::move(basis));
}

FiniteLieAlgebra FiniteLieAlgebra::sl(std::size_t n) {
    if (n < 2) throw domain_error("sl(n) needs n >= 2");
    std::vector<QiMatrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            QiMatrix E(n, n);
            E(i, j) = GaussianRational(1);
            basis.push_back(std::move(E));
        }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        QiMatrix H(n, n);
        H(k, k) = GaussianRational(1);
        H(k + 1, k + 1) = GaussianRational(-1);
        basis.push_back(std::move(H));
    }
    return from_matrices("sl" + std::to_string(n), std::move(basis));
}

FiniteLieAlgebra FiniteLieAlgebra::so(std::size_t n) {
    if (n < 2) throw domain_error("so(n) needs n >= 2");
    std::vector<QiMatrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QiMatrix F(n, n);
            F(i, j) = GaussianRational(1);
            F(j, i) = GaussianRational(-1);
            basis.push_back(std::move(F));
        }
    return from_matrices("so" + std::to_string(n), std::move(basis));
}

FiniteLieAlgebra FiniteLieAlgebra::sp(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw domain_error("sp(n) needs even n >= 2");
    std::size_t m = n / 2;
    std::vector<QiMatrix> basis;
    // Block form [[A, B],[C, -A^t]] with B, C symmetric.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            QiMatrix X(n, n);
            X(i, j) = GaussianRational(1);
            X(m + j, m + i) = GaussianRational(-1);
            basis.push_back(std::move(X));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            QiMatrix B(n, n);
            B(i, m + j) = GaussianRational(1);
            B(j, m + i) = GaussianRational(1);
            basis.push_back(std::move(B));
            QiMatrix C(n, n);
            C(m + i, j) = GaussianRational(1);
            C(m + j, i) = GaussianRational(1);
            basis.push_back(std::move(C));
        }
    return from_matrices("sp" + std::to_string(n), std::move(basis));
}

FiniteLieAlgebra FiniteLieAlgebra::by_name(const std::string& name) {
    auto split = [&](const char* prefix) -> long {
        std::size_t plen = std::string(prefix).size();
        if (name.rfind(prefix, 0) != 0 || name.size() == plen) return -1;
        for (std::size_t k = plen; k < name.size(); ++k)
            if (!isdigit(static_cast<unsigned char>(name[k]))) return -1;
        return std::stol(name.substr(plen));
    };
    if (long d = split("abelian"); d > 0) return abelian(static_cast<std::size_t>(d));
    if (long d = split("gl"); d > 0) return gl(static_cast<std::size_t>(d));
    if (long d = split("sl"); d > 0) return sl(static_cast<std::size_t>(d));
    if (long d = split("so"); d > 0) return so(static_cast<std::size_t>(d));
    if (long d = split("sp"); d > 0) return sp(static_cast<std::size_t>(d));
    throw parse_error("unknown finite Lie algebra: " + name);
}

const std::map<std::size_t, GaussianRational>& FiniteLieAlgebra::bracket_coeffs(
    std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw domain_error("Lie algebra basis index out of range");
    return sc_[i][j];
}

void FiniteLieAlgebra::validate() const {
    auto coeff = [&](std::size_t i, std::size_t j, std::size_t k) {
        auto it = sc_[i][j].find(k);
        return it == sc_[i][j].end() ? GaussianRational(0) : it->second;
    };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!(coeff(i, j, k) + coeff(j, i, k)).is_zero())
                    throw defect_error(name_ + ": bracket not antisymmetric at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t m = 0; m < dim_; ++m) {
                    GaussianRational acc;
                    for (std::size_t l = 0; l < dim_; ++l) {
                        acc += coeff(j, k, l) * coeff(i, l, m);
                        acc += coeff(k, i, l) * coeff(j, l, m);
                        acc += coeff(i, j, l) * coeff(k, l, m);
                    }
                    if (!acc.is_zero())
                        throw defect_error(name_ + ": Jacobi fails at (" + std::to_string(i) +
                                           "," + std::to_string(j) + "," + std::to_string(k) +
                                           ")");
                }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!(beta_(i, j) == beta_(j, i)))
                throw defect_error(name_ + ": beta not symmetric");
        }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                GaussianRational acc;
                for (std::size_t l = 0; l < dim_; ++l) {
                    acc += coeff(i, j, l) * beta_(l, k);
                    acc += coeff(i, k, l) * beta_(j, l);
                }
                if (!acc.is_zero())
                    throw defect_error(name_ + ": beta not invariant at (" + std::to_string(i) +
                                       "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
}

CurrentElement CurrentElement::zero(const FiniteLieAlgebra& g) {
    CurrentElement out;
    out.comps.assign(g.dim(), MeromorphicForm{HalfInteger(0), RationalFunction::zero()});
    return out;
}

CurrentElement CurrentElement::pure(const FiniteLieAlgebra& g, std::size_t direction,
                                    MeromorphicForm f) {
    if (direction >= g.dim()) throw domain_error("current direction out of range");
    require_weight(f, 0, "current coefficient");
    CurrentElement out = zero(g);
    out.comps[direction] = std::move(f);
    return out;
}

bool CurrentElement::is_zero() const {
    for (const auto& f : comps)
        if (!f.is_zero()) return false;
    return true;
}

CurrentElement& CurrentElement::operator+=(const CurrentElement& o) {
    if (comps.size() != o.comps.size()) throw domain_error("current element size mismatch");
    for (std::size_t k = 0; k < comps.size(); ++k) comps[k].rep += o.comps[k].rep;
    return *this;
}

CurrentElement current_bracket(const FiniteLieAlgebra& g, const CurrentElement& a,
                               const CurrentElement& b) {
    if (a.comps.size() != g.dim() || b.comps.size() != g.dim())
        throw domain_error("current element does not match the Lie algebra dimension");
    CurrentElement out = CurrentElement::zero(g);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (a.comps[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (b.comps[j].is_zero()) continue;
            RationalFunction prod = a.comps[i].rep * b.comps[j].rep;
            for (const auto& [k, c] : g.bracket_coeffs(i, j)) out.comps[k].rep += c * prod;
        }
    }
    return out;
}

CurrentElement current_jacobi_defect(const FiniteLieAlgebra& g, const CurrentElement& a,
                                     const CurrentElement& b, const CurrentElement& c) {
    CurrentElement out = current_bracket(g, current_bracket(g, a, b), c);
    out += current_bracket(g, current_bracket(g, b, c), a);
    out += current_bracket(g, current_bracket(g, c, a), b);
    return out;
}

HomogeneousDimensions homogeneous_dimensions(const MarkedSphere& geom) {
    long K = geom.K();
    return {K, K, 3 * K, 2 * K};
}

}  // namespace kn
