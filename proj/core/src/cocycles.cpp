#include "kn/cocycles.hpp"

#include <vector>

#include "kn/parallel.hpp"

namespace kn {

GaussianRational integrate_over(const CycleClass& cycle, const MeromorphicForm& omega,
                                const MarkedSphere& geom) {
    if (!omega.is_zero() && omega.weight != HalfInteger(1))
        throw weight_mismatch("only 1-forms can be integrated, got weight " + omega.weight.str());
    if (cycle.size() != geom.K())
        throw domain_error("cycle class size does not match the number of in-points");
    GaussianRational acc;
    for (int i = 1; i <= geom.K(); ++i) {
        long m = cycle.multiplicity(i);
        if (m == 0) continue;
        acc += GaussianRational(Rational(m)) * residue_at(omega.rep, ExtendedPoint(geom.point(i)));
    }
    return acc;
}

GaussianRational psi1(const MeromorphicForm& g, const MeromorphicForm& h, const CycleClass& cycle,
                      const MarkedSphere& geom) {
    if (!g.is_zero() && g.weight != HalfInteger(0))
        throw weight_mismatch("psi1 takes functions");
    if (!h.is_zero() && h.weight != HalfInteger(0))
        throw weight_mismatch("psi1 takes functions");
    return integrate_over(cycle, {HalfInteger(1), g.rep * h.rep.derivative()}, geom);
}

GaussianRational psi2(const FiniteLieAlgebra& alg, const CurrentElement& a,
                      const CurrentElement& b, const CycleClass& cycle, const MarkedSphere& geom) {
    if (a.comps.size() != alg.dim() || b.comps.size() != alg.dim())
        throw domain_error("current element does not match the Lie algebra dimension");
    GaussianRational acc;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (a.comps[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (b.comps[j].is_zero() || alg.beta(i, j).is_zero()) continue;
            acc += alg.beta(i, j) * psi1(a.comps[i], b.comps[j], cycle, geom);
        }
    }
    return acc;
}

GaussianRational psi3(const MeromorphicForm& e, const MeromorphicForm& f,
                      const ProjectiveConnection& R, const CycleClass& cycle,
                      const MarkedSphere& geom) {
    if (!e.is_zero() && e.weight != HalfInteger(-1))
        throw weight_mismatch("psi3 takes vector fields");
    if (!f.is_zero() && f.weight != HalfInteger(-1))
        throw weight_mismatch("psi3 takes vector fields");
    const RationalFunction& a = e.rep;
    const RationalFunction& b = f.rep;
    RationalFunction a1 = a.derivative();
    RationalFunction b1 = b.derivative();
    RationalFunction integrand =
        GaussianRational(Rational(1, 2)) * (a1.derivative().derivative() * b - a * b1.derivative().derivative()) -
        R.rep * (a1 * b - a * b1);
    return integrate_over(cycle, {HalfInteger(1), std::move(integrand)}, geom);
}

GaussianRational psi4(const MeromorphicForm& e, const MeromorphicForm& g,
                      const AffineConnection& T, const CycleClass& cycle,
                      const MarkedSphere& geom) {
    if (!e.is_zero() && e.weight != HalfInteger(-1))
        throw weight_mismatch("psi4 takes a vector field first");
    if (!g.is_zero() && g.weight != HalfInteger(0))
        throw weight_mismatch("psi4 takes a function second");
    RationalFunction g1 = g.rep.derivative();
    RationalFunction integrand = e.rep * g1.derivative() + T.rep * (e.rep * g1);
    return integrate_over(cycle, {HalfInteger(1), std::move(integrand)}, geom);
}

GaussianRational d1_cocycle(const D1Cocycle& spec, const D1Element& x, const D1Element& y,
                            const MarkedSphere& geom) {
    GaussianRational acc;
    if (!spec.c_fn.is_zero()) acc += spec.c_fn * psi1(x.fn, y.fn, spec.cycle, geom);
    if (!spec.c_vec.is_zero()) acc += spec.c_vec * psi3(x.vec, y.vec, spec.R, spec.cycle, geom);
    if (!spec.c_mix.is_zero())
        acc += spec.c_mix * (psi4(x.vec, y.fn, spec.T, spec.cycle, geom) -
                             psi4(y.vec, x.fn, spec.T, spec.cycle, geom));
    return acc;
}

GaussianRational super_phi(const SuperElement& x, const SuperElement& y,
                           const ProjectiveConnection& R, const CycleClass& cycle,
                           const MarkedSphere& geom) {
    GaussianRational acc = psi3(x.even, y.even, R, cycle, geom);
    if (!x.odd.is_zero() && !y.odd.is_zero()) {
        const RationalFunction& p = x.odd.rep;
        const RationalFunction& q = y.odd.rep;
        RationalFunction integrand = p.derivative().derivative() * q +
                                     p * q.derivative().derivative() - R.rep * (p * q);
        acc -= integrate_over(cycle, {HalfInteger(1), std::move(integrand)}, geom);
    }
    return acc;
}

GaussianRational super_cocycle_defect(
    const std::function<GaussianRational(const SuperElement&, const SuperElement&)>& c,
    const SuperElement& x, const SuperElement& y, const SuperElement& z) {
    int px = x.parity(), py = y.parity(), pz = z.parity();
    auto sign = [](int a, int b) { return a * b % 2 ? GaussianRational(-1) : GaussianRational(1); };
    return sign(px, pz) * c(x, super_bracket(y, z)) + sign(py, px) * c(y, super_bracket(z, x)) +
           sign(pz, py) * c(z, super_bracket(x, y));
}

GaussianRational super_mixed_condition_defect(
    const std::function<GaussianRational(const SuperElement&, const SuperElement&)>& c,
    const MeromorphicForm& e, const MeromorphicForm& phi, const MeromorphicForm& psi) {
    SuperElement se = SuperElement::from_even(e);
    SuperElement sphi = SuperElement::from_odd(phi);
    SuperElement spsi = SuperElement::from_odd(psi);
    SuperElement phi_psi = super_bracket(sphi, spsi);  // even
    SuperElement e_psi = super_bracket(se, spsi);      // odd
    SuperElement e_phi = super_bracket(se, sphi);      // odd
    return c(se, phi_psi) - c(sphi, e_psi) - c(spsi, e_phi);
}

GaussianRational l_invariance_defect(const MeromorphicForm& e, const MeromorphicForm& g,
                                     const MeromorphicForm& h, const CycleClass& cycle,
                                     const MarkedSphere& geom) {
    return psi1(lie_derivative(e, g), h, cycle, geom) + psi1(g, lie_derivative(e, h), cycle, geom);
}

LocalityWindow locality_scan(const CocycleSet& spec, const ScanConfig& config,
                             const BasisCache& basis) {
    const MarkedSphere& geom = basis.geometry();
    int K = geom.K();

    // Homogeneous elements are tagged with their degree so the scan can
    // bucket values by n+m.
    struct Item {
        HalfInteger degree;
        D1Element d1;       // functions / vector fields / d1
        SuperElement s;     // super_alg
        CurrentElement cur; // current
    };
    std::vector<Item> items;

    auto zero_fn = MeromorphicForm{HalfInteger(0), RationalFunction::zero()};
    auto zero_vec = MeromorphicForm{HalfInteger(-1), RationalFunction::zero()};
    auto zero_odd = MeromorphicForm{HalfInteger::from_twice(-1), RationalFunction::zero()};

    switch (config.kind) {
        case AlgebraKind::functions:
            for (HalfInteger n : degree_range(HalfInteger(0), config.lo, config.hi))
                for (int p = 1; p <= K; ++p)
                    items.push_back({n,
                                     D1Element::from_function(basis.element({HalfInteger(0), n, p})),
                                     {},
                                     {}});
            break;
        case AlgebraKind::vector_fields:
            for (HalfInteger n : degree_range(HalfInteger(-1), config.lo, config.hi))
                for (int p = 1; p <= K; ++p)
                    items.push_back(
                        {n,
                         D1Element::from_vector_field(basis.element({HalfInteger(-1), n, p})),
                         {},
                         {}});
            break;
        case AlgebraKind::d1:
            for (HalfInteger n : degree_range(HalfInteger(0), config.lo, config.hi))
                for (int p = 1; p <= K; ++p) {
                    items.push_back({n,
                                     D1Element::from_function(basis.element({HalfInteger(0), n, p})),
                                     {},
                                     {}});
                    items.push_back(
                        {n,
                         D1Element::from_vector_field(basis.element({HalfInteger(-1), n, p})),
                         {},
                         {}});
                }
            break;
        case AlgebraKind::super_alg:
            for (HalfInteger n : degree_range(HalfInteger(-1), config.lo, config.hi))
                for (int p = 1; p <= K; ++p)
                    items.push_back(
                        {n, {}, SuperElement::from_even(basis.element({HalfInteger(-1), n, p})), {}});
            for (HalfInteger n :
                 degree_range(HalfInteger::from_twice(-1), config.lo, config.hi))
                for (int p = 1; p <= K; ++p)
                    items.push_back(
                        {n,
                         {},
                         SuperElement::from_odd(
                             basis.element({HalfInteger::from_twice(-1), n, p})),
                         {}});
            break;
        case AlgebraKind::current: {
            if (!config.algebra)
                throw domain_error("current-algebra scan needs a finite Lie algebra");
            for (HalfInteger n : degree_range(HalfInteger(0), config.lo, config.hi))
                for (int p = 1; p <= K; ++p)
                    for (std::size_t a = 0; a < config.algebra->dim(); ++a)
                        items.push_back({n,
                                         {},
                                         {},
                                         CurrentElement::pure(*config.algebra, a,
                                                              basis.element({HalfInteger(0), n, p}))});
            break;
        }
    }

    auto evaluate = [&](const Item& x, const Item& y) -> GaussianRational {
        switch (config.kind) {
            case AlgebraKind::functions:
                return psi1(x.d1.fn, y.d1.fn, spec.cycle, geom);
            case AlgebraKind::vector_fields:
                return psi3(x.d1.vec, y.d1.vec, spec.R, spec.cycle, geom);
            case AlgebraKind::d1: {
                D1Cocycle mix{GaussianRational(0), GaussianRational(0), GaussianRational(1),
                              spec.R, spec.T, spec.cycle};
                return d1_cocycle(mix, x.d1, y.d1, geom);
            }
            case AlgebraKind::super_alg:
                return super_phi(x.s, y.s, spec.R, spec.cycle, geom);
            case AlgebraKind::current:
                return psi2(*config.algebra, x.cur, y.cur, spec.cycle, geom);
        }
        throw domain_error("unreachable scan kind");
    };

    LocalityWindow out;
    std::vector<GaussianRational> values(items.size() * items.size());
    parallel_for(items.size() * items.size(), config.jobs, [&](std::size_t k) {
        std::size_t i = k / items.size(), j = k % items.size();
        values[k] = evaluate(items[i], items[j]);
    });
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = 0; j < items.size(); ++j) {
            ++out.pairs_scanned;
            const GaussianRational& v = values[i * items.size() + j];
            if (v.is_zero()) continue;
            HalfInteger total = items[i].degree + items[j].degree;
            if (out.empty) {
                out.M1 = out.M2 = total;
                out.empty = false;
            } else {
                if (total < out.M1) out.M1 = total;
                if (total > out.M2) out.M2 = total;
            }
            ++out.nonzero_values;
        }
    return out;
}

}  // namespace kn
