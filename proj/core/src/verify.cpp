#include "kn/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "kn/algebras.hpp"
#include "kn/cocycles.hpp"
#include "kn/fock.hpp"

namespace kn {

namespace {

using Check = std::function<std::string()>;  // returns detail, throws on failure

[[noreturn]] void fail(const std::string& message) { throw defect_error(message); }

std::vector<HalfInteger> degrees(HalfInteger weight, long lo, long hi) {
    return degree_range(weight, HalfInteger(lo), HalfInteger(hi));
}

Rational small_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 9) - 4;
    long den = static_cast<long>(rng() % 3) + 1;
    return Rational(num, den);
}

GaussianRational small_scalar(std::mt19937_64& rng) {
    Rational re = small_rational(rng);
    Rational im = rng() % 4 == 0 ? small_rational(rng) : Rational(0);
    return {re, im};
}

// A random admissible representative: small numerator over a product of
// linear factors at the in-points.
RationalFunction random_admissible(const MarkedSphere& geom, std::mt19937_64& rng) {
    Polynomial num;
    for (std::size_t e = 0; e <= 2; ++e) num = num + Polynomial::monomial(small_scalar(rng), e);
    Polynomial den = Polynomial::one();
    for (int i = 1; i <= geom.K(); ++i)
        if (rng() % 2 == 0) den = den * Polynomial::linear_root(geom.point(i));
    if (num.is_zero()) num = Polynomial::one();
    return RationalFunction(std::move(num), std::move(den));
}

std::string count_detail(long checked) { return std::to_string(checked) + " cases"; }

}  // namespace

std::vector<CheckResult> run_verification(const GeometryConfig& cfg, const VerifyOptions& opt) {
    const MarkedSphere& geom = cfg.geom;
    BasisCache basis(geom);
    const int K = geom.K();
    const long w = opt.window;
    CycleClass cs = CycleClass::separating(geom);

    auto pairing_check = [&]() {
        long checked = 0;
        for (HalfInteger lambda :
             {HalfInteger(-1), HalfInteger::from_twice(-1), HalfInteger(0),
              HalfInteger::from_twice(1), HalfInteger(1)}) {
            HalfInteger mu = HalfInteger(1) - lambda;
            for (HalfInteger n : degrees(lambda, -w, w))
                for (HalfInteger m : degrees(lambda, -w, w))
                    for (int p = 1; p <= K; ++p)
                        for (int r = 1; r <= K; ++r) {
                            MeromorphicForm f = basis.element({lambda, n, p});
                            MeromorphicForm g = basis.element({mu, -m, r});
                            GaussianRational want(Rational(n == m && p == r ? 1 : 0));
                            if (kn_pairing(f, g, geom) != want)
                                fail("duality fails at lambda=" + lambda.str() + " (" + n.str() +
                                     "," + std::to_string(p) + ")x(" + m.str() + "," +
                                     std::to_string(r) + ")");
                            ++checked;
                        }
        }
        return count_detail(checked);
    };

    auto orders_check = [&]() {
        long checked = 0;
        for (HalfInteger lambda : {HalfInteger(-1), HalfInteger(0), HalfInteger::from_twice(1)}) {
            for (HalfInteger n : degrees(lambda, -w, w))
                for (int p = 1; p <= K; ++p) {
                    MeromorphicForm f = basis.element({lambda, n, p});
                    long base = (n + HalfInteger(1) - lambda).to_integer();
                    long total = 0;
                    for (int i = 1; i <= K; ++i) {
                        long want = base - (i == p ? 1 : 0);
                        auto ord = form_order_at(f, ExtendedPoint(geom.point(i)));
                        if (!ord || *ord != want)
                            fail("in-point order of f_{" + n.str() + "," + std::to_string(p) +
                                 "} at point " + std::to_string(i));
                        total += *ord;
                    }
                    auto out = form_order_at(f, ExtendedPoint::infinity());
                    if (!out) fail("zero basis form");
                    total += *out;
                    if (total != -lambda.twice())
                        fail("divisor degree of f_{" + n.str() + "," + std::to_string(p) + "}");
                    long start = (n - lambda).to_integer();
                    LaurentSeries s =
                        local_expansion(f.rep, ExtendedPoint(geom.point(p)), start);
                    if (!(s.coeff(start) == GaussianRational(1)))
                        fail("normalization of f_{" + n.str() + "," + std::to_string(p) + "}");
                    ++checked;
                }
        }
        return count_detail(checked);
    };

    auto tables_check = [&]() {
        long checked = 0;
        struct Case {
            HalfInteger lambda, nu;
            TableOp op;
        };
        for (const Case& c : {Case{HalfInteger(-1), HalfInteger(-1), TableOp::bracket},
                              Case{HalfInteger(0), HalfInteger(0), TableOp::product},
                              Case{HalfInteger(-1), HalfInteger(0), TableOp::bracket}}) {
            StructureConstantTable table = structure_constants(
                basis, c.lambda, c.nu, c.op, HalfInteger(-w), HalfInteger(w), opt.jobs);
            GradingBounds bounds = grading_bounds(table);
            if (bounds.lower_shift != 0) fail("lower shift is not zero");
            for (const auto& [key, terms] : table.entries) {
                HalfInteger lead = key.n + key.m;
                GaussianRational want;
                if (c.op == TableOp::product) {
                    if (key.p == key.r) want = GaussianRational(1);
                } else if (key.p == key.r) {
                    Rational v = Rational(-1) * c.lambda.to_rational() * key.m.to_rational() +
                                 c.nu.to_rational() * key.n.to_rational();
                    want = GaussianRational(v);
                }
                for (const auto& [target, value] : terms) {
                    if (target.h < lead) fail("term below the grading bound");
                    if (target.h == lead && target.s != key.p && !value.is_zero() &&
                        key.p == key.r)
                        fail("off-point leading term");
                }
                GaussianRational got;
                auto it = terms.find({lead, key.p});
                if (it != terms.end()) got = it->second;
                if (key.p == key.r) {
                    if (!(got == want))
                        fail("leading coefficient at (" + key.n.str() + "," +
                             std::to_string(key.p) + ")x(" + key.m.str() + "," +
                             std::to_string(key.r) + ")");
                } else {
                    for (int s = 1; s <= K; ++s) {
                        auto jt = terms.find({lead, s});
                        if (jt != terms.end() && !jt->second.is_zero())
                            fail("nonzero leading term for distinct points");
                    }
                }
                ++checked;
            }
        }
        return count_detail(checked);
    };

    auto poisson_check = [&]() {
        std::mt19937_64 rng(opt.seed);
        const HalfInteger weights[] = {HalfInteger(-1), HalfInteger::from_twice(-1),
                                       HalfInteger(0), HalfInteger(1)};
        for (int t = 0; t < opt.random_triples; ++t) {
            FormSum a(form(weights[rng() % 4], random_admissible(geom, rng)));
            FormSum b(form(weights[rng() % 4], random_admissible(geom, rng)));
            FormSum c(form(weights[rng() % 4], random_admissible(geom, rng)));
            PoissonDefects d = poisson_defects(a, b, c);
            if (!d.all_zero()) fail("Poisson defect on triple " + std::to_string(t));
        }
        return count_detail(opt.random_triples);
    };

    auto super_elements = [&](long half_w) {
        std::vector<SuperElement> items;
        for (HalfInteger n : degrees(HalfInteger(-1), -half_w, half_w))
            for (int p = 1; p <= K; ++p)
                items.push_back(SuperElement::from_even(basis.element({HalfInteger(-1), n, p})));
        for (HalfInteger n : degrees(HalfInteger::from_twice(-1), -half_w, half_w))
            for (int p = 1; p <= K; ++p)
                items.push_back(
                    SuperElement::from_odd(basis.element({HalfInteger::from_twice(-1), n, p})));
        return items;
    };

    auto super_check = [&]() {
        std::vector<SuperElement> items = super_elements(1);
        long checked = 0;
        for (const auto& a : items)
            for (const auto& b : items)
                for (const auto& c : items) {
                    if (!super_jacobi_defect(a, b, c).is_zero())
                        fail("super Jacobi defect on " + a.str() + ", " + b.str() + ", " +
                             c.str());
                    ++checked;
                }
        return count_detail(checked);
    };

    auto cocycle_check = [&]() {
        long checked = 0;
        // Vector field cocycle.
        std::vector<MeromorphicForm> fields;
        for (HalfInteger n : degrees(HalfInteger(-1), -w, w))
            for (int p = 1; p <= K; ++p) fields.push_back(basis.element({HalfInteger(-1), n, p}));
        std::function<MeromorphicForm(const MeromorphicForm&, const MeromorphicForm&)> vb =
            [](const MeromorphicForm& a, const MeromorphicForm& b) { return form_bracket(a, b); };
        std::function<GaussianRational(const MeromorphicForm&, const MeromorphicForm&)> p3 =
            [&](const MeromorphicForm& a, const MeromorphicForm& b) {
                return psi3(a, b, cfg.proj, cs, geom);
            };
        for (const auto& x : fields)
            for (const auto& y : fields)
                for (const auto& z : fields) {
                    if (!cocycle_defect(vb, p3, x, y, z).is_zero())
                        fail("psi3 cocycle defect");
                    ++checked;
                }
        // Mixing cocycle on D1.
        std::vector<D1Element> ops;
        for (HalfInteger n : degrees(HalfInteger(0), -1, 1))
            for (int p = 1; p <= K; ++p) {
                ops.push_back(D1Element::from_function(basis.element({HalfInteger(0), n, p})));
                ops.push_back(D1Element::from_vector_field(basis.element({HalfInteger(-1), n, p})));
            }
        D1Cocycle mix{GaussianRational(0), GaussianRational(0), GaussianRational(1), cfg.proj,
                      cfg.aff, cs};
        D1Cocycle combo{GaussianRational(1), GaussianRational(1), GaussianRational(1), cfg.proj,
                        cfg.aff, cs};
        std::function<D1Element(const D1Element&, const D1Element&)> db = d1_bracket;
        for (const D1Cocycle& spec : {mix, combo}) {
            std::function<GaussianRational(const D1Element&, const D1Element&)> psi =
                [&](const D1Element& a, const D1Element& b) {
                    return d1_cocycle(spec, a, b, geom);
                };
            for (const auto& x : ops)
                for (const auto& y : ops)
                    for (const auto& z : ops) {
                        if (!cocycle_defect(db, psi, x, y, z).is_zero())
                            fail("D1 cocycle defect");
                        ++checked;
                    }
        }
        // Super cocycle, graded condition.
        std::function<GaussianRational(const SuperElement&, const SuperElement&)> phi =
            [&](const SuperElement& a, const SuperElement& b) {
                return super_phi(a, b, cfg.proj, cs, geom);
            };
        std::vector<SuperElement> items = super_elements(1);
        for (const auto& a : items)
            for (const auto& b : items)
                for (const auto& c : items) {
                    if (!super_cocycle_defect(phi, a, b, c).is_zero())
                        fail("super cocycle defect");
                    ++checked;
                }
        // Mixed condition spelled out.
        for (HalfInteger ne : degrees(HalfInteger(-1), -1, 1))
            for (int pe = 1; pe <= K; ++pe)
                for (HalfInteger na : degrees(HalfInteger::from_twice(-1), -1, 1))
                    for (int pa = 1; pa <= K; ++pa)
                        for (HalfInteger nb : degrees(HalfInteger::from_twice(-1), -1, 1))
                            for (int pb = 1; pb <= K; ++pb) {
                                MeromorphicForm e = basis.element({HalfInteger(-1), ne, pe});
                                MeromorphicForm u =
                                    basis.element({HalfInteger::from_twice(-1), na, pa});
                                MeromorphicForm v =
                                    basis.element({HalfInteger::from_twice(-1), nb, pb});
                                if (!super_mixed_condition_defect(phi, e, u, v).is_zero())
                                    fail("mixed parity condition");
                                ++checked;
                            }
        return count_detail(checked);
    };

    auto invariance_check = [&]() {
        long checked = 0;
        for (HalfInteger ne : degrees(HalfInteger(-1), -w, w))
            for (int pe = 1; pe <= K; ++pe)
                for (HalfInteger ng : degrees(HalfInteger(0), -w, w))
                    for (int pg = 1; pg <= K; ++pg)
                        for (HalfInteger nh : degrees(HalfInteger(0), -w, w))
                            for (int ph = 1; ph <= K; ++ph) {
                                MeromorphicForm e = basis.element({HalfInteger(-1), ne, pe});
                                MeromorphicForm g = basis.element({HalfInteger(0), ng, pg});
                                MeromorphicForm h = basis.element({HalfInteger(0), nh, ph});
                                if (!l_invariance_defect(e, g, h, cs, geom).is_zero())
                                    fail("invariance defect");
                                ++checked;
                            }
        return count_detail(checked);
    };

    auto clifford_check = [&]() {
        long checked = 0;
        for (HalfInteger lambda : {HalfInteger(0), HalfInteger::from_twice(1)}) {
            HalfInteger mu = HalfInteger(1) - lambda;
            FockSpace space(basis, lambda, lambda);
            std::vector<WedgeMonomial> monos =
                window_monomials(basis, lambda, HalfInteger(-1), HalfInteger(1));
            std::vector<GradedIndex> window;
            for (HalfInteger n : degrees(lambda, -1, 1))
                for (int p = 1; p <= K; ++p) window.push_back({lambda, n, p});
            for (const auto& i : window)
                for (const auto& j : window) {
                    MeromorphicForm f = basis.element(i);
                    MeromorphicForm g = basis.element({mu, -j.degree, j.point});
                    GaussianRational want(
                        Rational(i.degree == j.degree && i.point == j.point ? 1 : 0));
                    for (const auto& m : monos) {
                        FockVector v;
                        v.add(m, GaussianRational(1));
                        FockVector anti = space.wedge_op(f, space.contraction_op(g, v)) +
                                          space.contraction_op(g, space.wedge_op(f, v));
                        FockVector expect = want * v;
                        if (!(anti == expect)) fail("mixed anticommutator");
                        MeromorphicForm f2 = basis.element(j);
                        FockVector ww = space.wedge_op(f, space.wedge_op(f2, v)) +
                                        space.wedge_op(f2, space.wedge_op(f, v));
                        if (!ww.is_zero()) fail("wedge anticommutator");
                        MeromorphicForm g2 = basis.element({mu, -i.degree, i.point});
                        FockVector cc = space.contraction_op(g2, space.contraction_op(g, v)) +
                                        space.contraction_op(g, space.contraction_op(g2, v));
                        if (!cc.is_zero()) fail("contraction anticommutator");
                        ++checked;
                    }
                }
        }
        return count_detail(checked);
    };

    auto extension_check = [&]() {
        std::vector<MeromorphicForm> fields;
        for (HalfInteger n : degrees(HalfInteger(-1), -w, w))
            for (int p = 1; p <= K; ++p) fields.push_back(basis.element({HalfInteger(-1), n, p}));
        CentralExtension<MeromorphicForm>::BracketFn vb =
            [](const MeromorphicForm& a, const MeromorphicForm& b) { return form_bracket(a, b); };
        CentralExtension<MeromorphicForm>::CocycleFn p3 =
            [&](const MeromorphicForm& a, const MeromorphicForm& b) {
                return psi3(a, b, cfg.proj, cs, geom);
            };
        CentralExtension<MeromorphicForm> ext(
            vb, p3, GaussianRational(Rational(-1, 12)), fields,
            [](const MeromorphicForm& f) { return f.str(); });
        // One explicit extended bracket to pin the wiring.
        Extended<MeromorphicForm> a{fields.front(), GaussianRational(0)};
        Extended<MeromorphicForm> b{fields.back(), GaussianRational(0)};
        Extended<MeromorphicForm> c = ext.bracket(a, b);
        if (c.base != form_bracket(fields.front(), fields.back()))
            fail("extended bracket base part");
        return "certified on " + std::to_string(fields.size()) + " generators";
    };

    auto current_check = [&]() {
        FiniteLieAlgebra g = FiniteLieAlgebra::sl(2);
        g.validate();
        std::mt19937_64 rng(opt.seed + 1);
        std::function<CurrentElement(const CurrentElement&, const CurrentElement&)> cb =
            [&](const CurrentElement& a, const CurrentElement& b) {
                return current_bracket(g, a, b);
            };
        std::function<GaussianRational(const CurrentElement&, const CurrentElement&)> p2 =
            [&](const CurrentElement& a, const CurrentElement& b) {
                return psi2(g, a, b, cs, geom);
            };
        for (int t = 0; t < opt.random_triples; ++t) {
            auto pick = [&]() {
                return CurrentElement::pure(g, rng() % g.dim(),
                                            form(HalfInteger(0), random_admissible(geom, rng)));
            };
            CurrentElement a = pick(), b = pick(), c = pick();
            if (!current_jacobi_defect(g, a, b, c).is_zero()) fail("current Jacobi defect");
            if (!cocycle_defect(cb, p2, a, b, c).is_zero()) fail("current cocycle defect");
        }
        return count_detail(opt.random_triples);
    };

    std::vector<std::pair<std::string, Check>> checks = {
        {"basis-duality", pairing_check},
        {"basis-orders", orders_check},
        {"structure-tables", tables_check},
        {"poisson-identities", poisson_check},
        {"super-jacobi", super_check},
        {"cocycle-conditions", cocycle_check},
        {"function-cocycle-invariance", invariance_check},
        {"clifford-relations", clifford_check},
        {"central-extension", extension_check},
        {"current-algebra", current_check},
    };

    std::vector<CheckResult> results;
    for (auto& [name, fn] : checks) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = fn();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

Json verification_json(const std::vector<CheckResult>& results) {
    Json out = Json::object();
    bool all = true;
    Json checks = Json::array();
    for (const auto& r : results) {
        Json c = Json::object();
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["detail"] = r.detail;
        checks.push_back(std::move(c));
        all = all && r.passed;
    }
    out["all_passed"] = all;
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace kn
