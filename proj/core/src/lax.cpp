#include "kn/lax.hpp"

#include <sstream>

namespace kn {

namespace {

RfMatrix rf_of(const QiMatrix& m) {
    RfMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = RationalFunction(m(r, c));
    return out;
}

QiMatrix outer(const std::vector<GaussianRational>& u, const std::vector<GaussianRational>& v) {
    QiMatrix out(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out(r, c) = u[r] * v[c];
    return out;
}

bool all_zero(const std::vector<GaussianRational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<GaussianRational> mat_vec(const QiMatrix& m, const std::vector<GaussianRational>& v) {
    std::vector<GaussianRational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

GaussianRational dot(const std::vector<GaussianRational>& a,
                     const std::vector<GaussianRational>& b) {
    GaussianRational acc;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

bool poles_confined(const RationalFunction& f, const std::vector<GaussianRational>& allowed) {
    if (f.is_zero()) return true;
    Polynomial den = f.den();
    for (const auto& p : allowed) {
        long mult = den.root_multiplicity(p);
        for (long k = 0; k < mult; ++k) den = Polynomial::exact_div(den, Polynomial::linear_root(p));
    }
    return den.is_constant();
}

}  // namespace

std::string matrix_type_name(MatrixType t) {
    switch (t) {
        case MatrixType::gl: return "gl";
        case MatrixType::sl: return "sl";
        case MatrixType::so: return "so";
        case MatrixType::sp: return "sp";
    }
    return "?";
}

MatrixType matrix_type_from_name(const std::string& name) {
    if (name == "gl") return MatrixType::gl;
    if (name == "sl") return MatrixType::sl;
    if (name == "so") return MatrixType::so;
    if (name == "sp") return MatrixType::sp;
    throw parse_error("unknown matrix type: " + name);
}

void TyurinData::validate(const MarkedSphere& geom) const {
    if (n == 0) throw domain_error("matrix size must be positive");
    if (type == MatrixType::sp) {
        if (n % 2 != 0) throw domain_error("sp needs even matrix size");
        if (sigma.rows() != n || sigma.cols() != n)
            throw domain_error("symplectic form must be n x n");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!(sigma(r, c) + sigma(c, r)).is_zero())
                    throw domain_error("symplectic form is not skew");
        if (determinant(sigma).is_zero()) throw domain_error("symplectic form is degenerate");
    }
    for (std::size_t s = 0; s < points.size(); ++s) {
        const TyurinPoint& pt = points[s];
        if (pt.alpha.size() != n)
            throw domain_error("alpha size mismatch at Tyurin point " + std::to_string(s + 1));
        if (geom.is_in_point(pt.gamma))
            throw domain_error("Tyurin point " + pt.gamma.str() + " collides with an in-point");
        for (std::size_t t = s + 1; t < points.size(); ++t)
            if (points[t].gamma == pt.gamma)
                throw domain_error("duplicate Tyurin point " + pt.gamma.str());
        if (type == MatrixType::so && !dot(pt.alpha, pt.alpha).is_zero())
            throw domain_error("orthogonal alpha must be isotropic at point " +
                               std::to_string(s + 1));
    }
}

QiMatrix matrix_coefficient(const RfMatrix& L, const GaussianRational& gamma, long k) {
    QiMatrix out(L.rows(), L.cols());
    ExtendedPoint P(gamma);
    for (std::size_t r = 0; r < L.rows(); ++r)
        for (std::size_t c = 0; c < L.cols(); ++c)
            out(r, c) = local_expansion(L(r, c), P, k).coeff(k);
    return out;
}

LaxReport is_lax_element(const RfMatrix& L, const TyurinData& data, const MarkedSphere& geom) {
    data.validate(geom);
    LaxReport report;
    std::size_t n = data.n;
    if (L.rows() != n || L.cols() != n)
        throw domain_error("matrix shape does not match the Tyurin data");

    auto fail = [&report](int point, std::string constraint, std::string message) {
        report.ok = false;
        report.issues.push_back({point, std::move(constraint), std::move(message)});
    };

    // Global membership in the coefficient algebra.
    if (data.type == MatrixType::sl) {
        RationalFunction tr;
        for (std::size_t k = 0; k < n; ++k) tr += L(k, k);
        if (!tr.is_zero()) fail(0, "traceless", "trace is " + tr.str());
    } else if (data.type == MatrixType::so) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!(L(r, c) + L(c, r)).is_zero()) {
                    fail(0, "skew", "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                        ") breaks antisymmetry");
                    r = n;
                    break;
                }
    } else if (data.type == MatrixType::sp) {
        RfMatrix s = rf_of(data.sigma);
        RfMatrix d = L.transposed() * s + s * L;
        if (!d.is_zero()) fail(0, "sigma-skew", "L^t sigma + sigma L is nonzero");
    }

    // Poles only at the Tyurin points and the marked points.
    std::vector<GaussianRational> allowed = geom.in_points();
    for (const auto& pt : data.points) allowed.push_back(pt.gamma);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!poles_confined(L(r, c), allowed)) {
                fail(0, "pole-locations", "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                              ") has a pole away from the allowed points");
            }

    long max_pole = data.type == MatrixType::sp ? 2 : 1;
    for (std::size_t s = 0; s < data.points.size(); ++s) {
        const TyurinPoint& pt = data.points[s];
        int tag = static_cast<int>(s) + 1;
        bool active = !all_zero(pt.alpha);

        bool order_ok = true;
        for (std::size_t r = 0; r < n && order_ok; ++r)
            for (std::size_t c = 0; c < n && order_ok; ++c) {
                auto ord = order_at(L(r, c), ExtendedPoint(pt.gamma));
                if (ord.has_value() && *ord < -max_pole) {
                    fail(tag, "pole-order", "entry (" + std::to_string(r) + "," +
                                                std::to_string(c) + ") has order " +
                                                std::to_string(*ord));
                    order_ok = false;
                }
            }
        if (!order_ok) {
            report.kappas.push_back(std::nullopt);
            continue;
        }

        QiMatrix Lm1 = matrix_coefficient(L, pt.gamma, -1);
        QiMatrix L0 = matrix_coefficient(L, pt.gamma, 0);

        if (!active) {
            if (!Lm1.is_zero())
                fail(tag, "inactive-holomorphic", "alpha = 0 requires holomorphy, first order pole found");
            if (data.type == MatrixType::sp && !matrix_coefficient(L, pt.gamma, -2).is_zero())
                fail(tag, "inactive-holomorphic", "alpha = 0 requires holomorphy, second order pole found");
            report.kappas.push_back(std::nullopt);
            continue;
        }

        std::size_t pivot = 0;
        while (pt.alpha[pivot].is_zero()) ++pivot;

        auto check_eigen = [&](const QiMatrix& constant) -> std::optional<GaussianRational> {
            std::vector<GaussianRational> v = mat_vec(constant, pt.alpha);
            GaussianRational kappa = v[pivot] / pt.alpha[pivot];
            for (std::size_t k = 0; k < n; ++k)
                if (!(v[k] == kappa * pt.alpha[k])) {
                    fail(tag, "eigenvector",
                         "alpha is not an eigenvector of the constant term");
                    return std::nullopt;
                }
            return kappa;
        };

        if (data.type == MatrixType::gl || data.type == MatrixType::sl) {
            std::vector<GaussianRational> beta(n);
            GaussianRational inv = pt.alpha[pivot].inverse();
            for (std::size_t c = 0; c < n; ++c) beta[c] = Lm1(pivot, c) * inv;
            if (!(Lm1 == outer(pt.alpha, beta)))
                fail(tag, "rank-one-pole", "first order part is not alpha beta^t");
            else if (!dot(beta, pt.alpha).is_zero())
                fail(tag, "pairing", "beta^t alpha must vanish, got " + dot(beta, pt.alpha).str());
            report.kappas.push_back(check_eigen(L0));
        } else if (data.type == MatrixType::so) {
            // Solve alpha beta^t - beta alpha^t = Lm1 together with
            // beta^t alpha = 0.
            QiMatrix A(n * n + 1, n);
            std::vector<GaussianRational> rhs(n * n + 1);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    A(r * n + c, c) += pt.alpha[r];
                    A(r * n + c, r) -= pt.alpha[c];
                    rhs[r * n + c] = Lm1(r, c);
                }
            for (std::size_t k = 0; k < n; ++k) A(n * n, k) = pt.alpha[k];
            if (!solve_linear(A, rhs).has_value())
                fail(tag, "pair-structure",
                     "first order part is not alpha beta^t - beta alpha^t with beta^t alpha = 0");
            report.kappas.push_back(check_eigen(L0));
        } else {
            // sp: second order coefficient proportional to alpha alpha^t sigma.
            QiMatrix Lm2 = matrix_coefficient(L, pt.gamma, -2);
            QiMatrix pattern = outer(pt.alpha, pt.alpha) * data.sigma;
            std::size_t pr = 0, pc = 0;
            bool found = false;
            for (std::size_t r = 0; r < n && !found; ++r)
                for (std::size_t c = 0; c < n && !found; ++c)
                    if (!pattern(r, c).is_zero()) {
                        pr = r;
                        pc = c;
                        found = true;
                    }
            GaussianRational nu = Lm2(pr, pc) / pattern(pr, pc);
            if (!(Lm2 == nu * pattern))
                fail(tag, "second-order-pole",
                     "second order part is not nu alpha alpha^t sigma");

            std::vector<GaussianRational> sig_alpha = mat_vec(data.sigma, pt.alpha);
            std::vector<GaussianRational> alpha_sig(n);  // (alpha^t sigma)_c
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t j = 0; j < n; ++j) alpha_sig[c] += pt.alpha[j] * data.sigma(j, c);
            QiMatrix A(n * n + 1, n);
            std::vector<GaussianRational> rhs(n * n + 1);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    for (std::size_t k = 0; k < n; ++k)
                        A(r * n + c, k) += pt.alpha[r] * data.sigma(k, c);
                    A(r * n + c, r) += alpha_sig[c];
                    rhs[r * n + c] = Lm1(r, c);
                }
            for (std::size_t k = 0; k < n; ++k) A(n * n, k) = sig_alpha[k];
            if (!solve_linear(A, rhs).has_value())
                fail(tag, "pair-structure",
                     "first order part is not (alpha beta^t + beta alpha^t) sigma with "
                     "beta^t sigma alpha = 0");
            report.kappas.push_back(check_eigen(L0));

            QiMatrix L1 = matrix_coefficient(L, pt.gamma, 1);
            GaussianRational probe = dot(alpha_sig, mat_vec(L1, pt.alpha));
            if (!probe.is_zero())
                fail(tag, "first-jet", "alpha^t sigma L_1 alpha must vanish, got " + probe.str());
        }
    }
    return report;
}

std::vector<QiMatrix> type_matrix_basis(const TyurinData& data) {
    std::size_t n = data.n;
    std::vector<QiMatrix> basis;
    switch (data.type) {
        case MatrixType::gl:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    QiMatrix E(n, n);
                    E(i, j) = GaussianRational(1);
                    basis.push_back(std::move(E));
                }
            break;
        case MatrixType::sl:
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
            break;
        case MatrixType::so:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    QiMatrix F(n, n);
                    F(i, j) = GaussianRational(1);
                    F(j, i) = GaussianRational(-1);
                    basis.push_back(std::move(F));
                }
            break;
        case MatrixType::sp: {
            // Kernel of X -> X^t sigma + sigma X for the given form.
            QiMatrix A(n * n, n * n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t k = 0; k < n; ++k) {
                        A(r * n + c, k * n + r) += data.sigma(k, c);
                        A(r * n + c, k * n + c) += data.sigma(r, k);
                    }
            for (const auto& v : nullspace(std::move(A))) {
                QiMatrix X(n, n);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) X(r, c) = v[r * n + c];
                basis.push_back(std::move(X));
            }
            break;
        }
    }
    return basis;
}

RfMatrix lax_bracket(const RfMatrix& a, const RfMatrix& b) { return a * b - b * a; }

RfMatrix make_lax_element(const TyurinData& data, const LaxParams& params,
                          const MarkedSphere& geom) {
    data.validate(geom);
    std::size_t n = data.n;
    std::size_t R = data.points.size();
    if (params.beta.size() != R) throw domain_error("one beta vector per Tyurin point required");
    if (!params.kappa.empty() && params.kappa.size() != R)
        throw domain_error("kappa list size mismatch");
    if (data.type == MatrixType::sp && params.nu.size() != R)
        throw domain_error("one nu per Tyurin point required for sp");

    std::vector<QiMatrix> basis = type_matrix_basis(data);
    std::size_t dim = basis.size();

    // Fixed tail must consist of coefficient-algebra members.
    {
        QiMatrix M(n * n, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) M(r * n + c, j) = basis[j](r, c);
        for (const QiMatrix& t : params.tail) {
            if (t.rows() != n || t.cols() != n) throw domain_error("tail coefficient shape mismatch");
            std::vector<GaussianRational> rhs(n * n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) rhs[r * n + c] = t(r, c);
            if (!solve_linear(M, std::move(rhs)).has_value())
                throw domain_error("tail coefficient is not in the coefficient algebra");
        }
    }

    // Per-point singular matrices; inactive points contribute nothing.
    std::vector<bool> active(R);
    std::vector<QiMatrix> sing1(R, QiMatrix(n, n));  // coefficient of (z-gamma)^{-1}
    std::vector<QiMatrix> sing2(R, QiMatrix(n, n));  // coefficient of (z-gamma)^{-2}, sp only
    for (std::size_t s = 0; s < R; ++s) {
        const TyurinPoint& pt = data.points[s];
        active[s] = !all_zero(pt.alpha);
        if (!active[s]) continue;
        if (params.beta[s].size() != n) throw domain_error("beta size mismatch");
        const auto& beta = params.beta[s];
        switch (data.type) {
            case MatrixType::gl:
            case MatrixType::sl:
                if (!dot(beta, pt.alpha).is_zero())
                    throw domain_error("beta^t alpha must vanish at point " + std::to_string(s + 1));
                sing1[s] = outer(pt.alpha, beta);
                break;
            case MatrixType::so:
                if (!dot(beta, pt.alpha).is_zero())
                    throw domain_error("beta^t alpha must vanish at point " + std::to_string(s + 1));
                sing1[s] = outer(pt.alpha, beta) - outer(beta, pt.alpha);
                break;
            case MatrixType::sp: {
                std::vector<GaussianRational> sig_alpha = mat_vec(data.sigma, pt.alpha);
                if (!dot(beta, sig_alpha).is_zero())
                    throw domain_error("beta^t sigma alpha must vanish at point " +
                                       std::to_string(s + 1));
                sing1[s] = (outer(pt.alpha, beta) + outer(beta, pt.alpha)) * data.sigma;
                sing2[s] = params.nu[s] * (outer(pt.alpha, pt.alpha) * data.sigma);
                break;
            }
        }
    }

    // Value (and first derivative, for sp) at gamma_s of all the other
    // points' singular parts plus the fixed tail.
    auto foreign_at = [&](std::size_t s, bool derivative) {
        QiMatrix out(n, n);
        const GaussianRational& g = data.points[s].gamma;
        for (std::size_t t = 0; t < R; ++t) {
            if (t == s || !active[t]) continue;
            GaussianRational d = g - data.points[t].gamma;
            // 1/(z-c) -> -1/d^2 ; 1/(z-c)^2 -> -2/d^3 (derivatives at z=g)
            GaussianRational w1 = derivative ? -(d * d).inverse() : d.inverse();
            GaussianRational w2 = derivative ? GaussianRational(-2) * (d * d * d).inverse()
                                             : (d * d).inverse();
            out = out + w1 * sing1[t] + w2 * sing2[t];
        }
        for (std::size_t k = 0; k < params.tail.size(); ++k) {
            GaussianRational w;
            if (derivative) {
                if (k >= 1) w = GaussianRational(Rational(static_cast<long>(k))) * g.pow(static_cast<long>(k - 1));
            } else {
                w = g.pow(static_cast<long>(k));
            }
            if (!w.is_zero()) out = out + w * params.tail[k];
        }
        return out;
    };

    // Unknowns: polynomial tail coefficients in the algebra basis, degrees
    // 0..D, plus one kappa per active point without a pinned value.
    std::vector<std::size_t> free_kappa;  // unknown column per point, or npos
    for (std::size_t D = std::max<std::size_t>(1, R);; ++D) {
        std::size_t cols = dim * (D + 1);
        free_kappa.assign(R, static_cast<std::size_t>(-1));
        for (std::size_t s = 0; s < R; ++s) {
            if (!active[s]) continue;
            bool pinned = !params.kappa.empty() && params.kappa[s].has_value();
            if (!pinned) {
                free_kappa[s] = cols;
                ++cols;
            }
        }

        std::size_t rows = 0;
        for (std::size_t s = 0; s < R; ++s)
            if (active[s]) rows += n + (data.type == MatrixType::sp ? 1 : 0);

        QiMatrix A(rows, cols);
        std::vector<GaussianRational> rhs(rows);
        std::size_t row = 0;
        for (std::size_t s = 0; s < R; ++s) {
            if (!active[s]) continue;
            const TyurinPoint& pt = data.points[s];
            const GaussianRational& g = pt.gamma;
            QiMatrix fval = foreign_at(s, false);
            std::vector<GaussianRational> fe = mat_vec(fval, pt.alpha);
            bool pinned = !params.kappa.empty() && params.kappa[s].has_value();
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t k = 0; k <= D; ++k) {
                    GaussianRational zk = g.pow(static_cast<long>(k));
                    for (std::size_t a = 0; a < dim; ++a) {
                        GaussianRational coeff = zk * mat_vec(basis[a], pt.alpha)[r];
                        if (!coeff.is_zero()) A(row, k * dim + a) += coeff;
                    }
                }
                if (pinned) {
                    rhs[row] = *params.kappa[s] * pt.alpha[r] - fe[r];
                } else {
                    A(row, free_kappa[s]) -= pt.alpha[r];
                    rhs[row] = -fe[r];
                }
                ++row;
            }
            if (data.type == MatrixType::sp) {
                std::vector<GaussianRational> alpha_sig(n);
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t j = 0; j < n; ++j)
                        alpha_sig[c] += pt.alpha[j] * data.sigma(j, c);
                QiMatrix fder = foreign_at(s, true);
                for (std::size_t k = 1; k <= D; ++k) {
                    GaussianRational zk = GaussianRational(Rational(static_cast<long>(k))) *
                                          g.pow(static_cast<long>(k - 1));
                    for (std::size_t a = 0; a < dim; ++a) {
                        GaussianRational coeff =
                            zk * dot(alpha_sig, mat_vec(basis[a], pt.alpha));
                        if (!coeff.is_zero()) A(row, k * dim + a) += coeff;
                    }
                }
                rhs[row] = -dot(alpha_sig, mat_vec(fder, pt.alpha));
                ++row;
            }
        }

        auto sol = solve_linear(std::move(A), std::move(rhs));
        if (!sol) {
            if (D >= std::max<std::size_t>(1, R) + 3)
                throw domain_error("could not solve for a holomorphic tail");
            continue;
        }

        // Assemble the element.
        RfMatrix L(n, n);
        for (std::size_t s = 0; s < R; ++s) {
            if (!active[s]) continue;
            RationalFunction p1 = RationalFunction::linear_power(data.points[s].gamma, -1);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    if (!sing1[s](r, c).is_zero()) L(r, c) += sing1[s](r, c) * p1;
                }
            if (data.type == MatrixType::sp && !sing2[s].is_zero()) {
                RationalFunction p2 = RationalFunction::linear_power(data.points[s].gamma, -2);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (!sing2[s](r, c).is_zero()) L(r, c) += sing2[s](r, c) * p2;
            }
        }
        for (std::size_t k = 0; k < params.tail.size(); ++k) {
            RationalFunction zk(Polynomial::monomial(GaussianRational(1), k));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!params.tail[k](r, c).is_zero()) L(r, c) += params.tail[k](r, c) * zk;
        }
        for (std::size_t k = 0; k <= D; ++k) {
            RationalFunction zk(Polynomial::monomial(GaussianRational(1), k));
            for (std::size_t a = 0; a < dim; ++a) {
                const GaussianRational& u = (*sol)[k * dim + a];
                if (u.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (!basis[a](r, c).is_zero()) L(r, c) += (u * basis[a](r, c)) * zk;
            }
        }

        LaxReport check = is_lax_element(L, data, geom);
        if (!check.ok)
            throw defect_error("constructed element fails its own membership test: " +
                               check.issues.front().message);
        return L;
    }
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = static_cast<long>(rng() % 3) + 1;
    return Rational(num, den);
}

GaussianRational small_scalar(std::mt19937_64& rng) {
    Rational re = small_rational(rng);
    Rational im = rng() % 3 == 0 ? small_rational(rng) : Rational(0);
    return {re, im};
}

GaussianRational small_nonzero(std::mt19937_64& rng) {
    while (true) {
        GaussianRational x = small_scalar(rng);
        if (!x.is_zero()) return x;
    }
}

}  // namespace

TyurinData random_tyurin_data(MatrixType type, std::size_t n, int num_points,
                              const MarkedSphere& geom, std::mt19937_64& rng) {
    TyurinData data;
    data.type = type;
    data.n = n;
    if (type == MatrixType::sp) {
        std::size_t m = n / 2;
        data.sigma = QiMatrix(n, n);
        for (std::size_t k = 0; k < m; ++k) {
            data.sigma(k, m + k) = GaussianRational(1);
            data.sigma(m + k, k) = GaussianRational(-1);
        }
    }
    while (static_cast<int>(data.points.size()) < num_points) {
        GaussianRational g = small_scalar(rng);
        bool clash = geom.is_in_point(g);
        for (const auto& pt : data.points) clash = clash || pt.gamma == g;
        if (clash) continue;
        TyurinPoint pt;
        pt.gamma = g;
        if (type == MatrixType::so) {
            // (a, i a) in two random coordinates is isotropic for the dot
            // product.
            pt.alpha.assign(n, GaussianRational(0));
            std::size_t i = rng() % n;
            std::size_t j = rng() % n;
            while (j == i) j = rng() % n;
            GaussianRational a = small_nonzero(rng);
            pt.alpha[i] = a;
            pt.alpha[j] = GaussianRational::i() * a;
        } else {
            pt.alpha.assign(n, GaussianRational(0));
            for (auto& x : pt.alpha) x = small_scalar(rng);
            if (all_zero(pt.alpha)) pt.alpha[0] = GaussianRational(1);
        }
        data.points.push_back(std::move(pt));
    }
    return data;
}

LaxParams random_lax_params(const TyurinData& data, std::mt19937_64& rng) {
    LaxParams params;
    std::size_t n = data.n;
    for (const TyurinPoint& pt : data.points) {
        std::vector<GaussianRational> beta(n);
        for (auto& x : beta) x = small_scalar(rng);
        if (!all_zero(pt.alpha)) {
            // Project onto the pairing constraint.
            if (data.type == MatrixType::sp) {
                std::vector<GaussianRational> sig_alpha = mat_vec(data.sigma, pt.alpha);
                std::size_t piv = 0;
                while (sig_alpha[piv].is_zero()) ++piv;
                GaussianRational c = dot(beta, sig_alpha);
                beta[piv] -= c / sig_alpha[piv];
            } else {
                std::size_t piv = 0;
                while (pt.alpha[piv].is_zero()) ++piv;
                GaussianRational c = dot(beta, pt.alpha);
                beta[piv] -= c / pt.alpha[piv];
            }
        }
        params.beta.push_back(std::move(beta));
        params.kappa.push_back(small_scalar(rng));
        params.nu.push_back(small_scalar(rng));
    }
    return params;
}

LaxClosureReport certify_lax_closure(const TyurinData& data, const MarkedSphere& geom,
                                     std::uint64_t seed, int pairs) {
    LaxClosureReport report;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < pairs; ++k) {
        RfMatrix a = make_lax_element(data, random_lax_params(data, rng), geom);
        RfMatrix b = make_lax_element(data, random_lax_params(data, rng), geom);
        LaxReport br = is_lax_element(lax_bracket(a, b), data, geom);
        ++report.pairs_checked;
        if (!br.ok) {
            report.ok = false;
            report.witness = "bracket of pair " + std::to_string(k) + " fails: " +
                             br.issues.front().constraint + " (" + br.issues.front().message + ")";
            return report;
        }
        if (data.type == MatrixType::gl) {
            LaxReport prod = is_lax_element(a * b, data, geom);
            if (!prod.ok) {
                report.ok = false;
                report.witness = "product of pair " + std::to_string(k) + " fails: " +
                                 prod.issues.front().constraint;
                return report;
            }
        }
    }
    return report;
}

}  // namespace kn
