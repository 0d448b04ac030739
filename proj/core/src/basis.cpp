#include "kn/basis.hpp"

#include <algorithm>
#include <vector>

#include "kn/parallel.hpp"

namespace kn {

MeromorphicForm BasisCache::element(const GradedIndex& idx) const {
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(idx);
        if (it != cache_.end()) return it->second;
    }
    MeromorphicForm built = build(idx);
    std::unique_lock lock(mu_);
    auto [it, fresh] = cache_.try_emplace(idx, std::move(built));
    return it->second;
}

std::size_t BasisCache::cached_count() const {
    std::shared_lock lock(mu_);
    return cache_.size();
}

MeromorphicForm BasisCache::build(const GradedIndex& idx) const {
    if (idx.point < 1 || idx.point > geom_.K())
        throw domain_error("basis point index out of range: " + idx.str());
    if (!in_degree_set(idx.degree, idx.weight))
        throw domain_error("degree " + idx.degree.str() + " is not admissible for weight " +
                           idx.weight.str());
    // Exponent at P_i: (n + 1 - lambda) - delta_{i,p}.
    long base = (idx.degree + HalfInteger(1) - idx.weight).to_integer();
    RationalFunction rep = RationalFunction::one();
    GaussianRational scale(1);
    const GaussianRational& zp = geom_.point(idx.point);
    for (int i = 1; i <= geom_.K(); ++i) {
        long e = base - (i == idx.point ? 1 : 0);
        rep *= RationalFunction::linear_power(geom_.point(i), e);
        // The normalization divides out the value of the off-p factors at P_p.
        if (i != idx.point) scale *= (zp - geom_.point(i)).pow(-e);
    }
    return {idx.weight, scale * rep};
}

GaussianRational kn_pairing(const MeromorphicForm& f, const MeromorphicForm& g,
                            const MarkedSphere& geom) {
    if (f.weight + g.weight != HalfInteger(1))
        throw weight_mismatch("pairing requires weights summing to 1, got " + f.weight.str() +
                              " and " + g.weight.str());
    RationalFunction prod = f.rep * g.rep;
    GaussianRational acc;
    for (int i = 1; i <= geom.K(); ++i) acc += residue_at(prod, ExtendedPoint(geom.point(i)));
    return acc;
}

std::map<GradedIndex, GaussianRational> expand_in_basis(const MeromorphicForm& f,
                                                        const BasisCache& basis) {
    std::map<GradedIndex, GaussianRational> out;
    if (f.is_zero()) return out;
    const MarkedSphere& geom = basis.geometry();
    if (!is_admissible(f, geom))
        throw domain_error("form has poles away from the marked points: " + f.str());

    long K = geom.K();
    // Degree support from the pole orders: n >= lambda + min_i ord_{P_i} and
    // n <= lambda + floor(-ord_out / K); outside, every dual pairing vanishes.
    long min_ord = 0;
    bool have = false;
    for (int i = 1; i <= K; ++i) {
        auto ord = order_at(f.rep, ExtendedPoint(geom.point(i)));
        if (!have || *ord < min_ord) min_ord = *ord, have = true;
    }
    long oinf = *order_at(f.rep, ExtendedPoint::infinity());
    // floor division for possibly negative numerator
    long q = -oinf >= 0 ? (-oinf) / K : -((oinf + K - 1) / K);
    HalfInteger lo = f.weight + HalfInteger(min_ord);
    HalfInteger hi = f.weight + HalfInteger(q);

    for (HalfInteger n : degree_range(f.weight, lo, hi)) {
        for (int p = 1; p <= K; ++p) {
            GradedIndex dual{HalfInteger(1) - f.weight, -n, p};
            GaussianRational c = kn_pairing(f, basis.element(dual), geom);
            if (!c.is_zero()) out[GradedIndex{f.weight, n, p}] = std::move(c);
        }
    }
    return out;
}

bool filtration_membership(const MeromorphicForm& f, HalfInteger n, const MarkedSphere& geom) {
    if (f.is_zero()) return true;
    if (!in_degree_set(n, f.weight))
        throw domain_error("filtration degree " + n.str() + " not admissible for weight " +
                           f.weight.str());
    long bound = (n - f.weight).to_integer();
    for (int i = 1; i <= geom.K(); ++i) {
        auto ord = order_at(f.rep, ExtendedPoint(geom.point(i)));
        if (*ord < bound) return false;
    }
    return true;
}

TriangularParts triangular_decompose(const MeromorphicForm& f, const BasisCache& basis, long R) {
    if (R < 0) throw domain_error("triangular decomposition needs R >= 0");
    auto coeffs = expand_in_basis(f, basis);
    TriangularParts parts{{f.weight, RationalFunction::zero()},
                          {f.weight, RationalFunction::zero()},
                          {f.weight, RationalFunction::zero()}};
    for (const auto& [idx, c] : coeffs) {
        RationalFunction term = c * basis.element(idx).rep;
        if (idx.degree > HalfInteger(0))
            parts.plus.rep += term;
        else if (idx.degree >= HalfInteger(-R))
            parts.zero.rep += term;
        else
            parts.minus.rep += term;
    }
    return parts;
}

StructureConstantTable structure_constants(const BasisCache& basis, HalfInteger lambda,
                                           HalfInteger nu, TableOp op, HalfInteger lo,
                                           HalfInteger hi, unsigned jobs) {
    StructureConstantTable table{op, lambda, nu, lo, hi, {}};
    const MarkedSphere& geom = basis.geometry();
    int K = geom.K();

    std::vector<TableKey> keys;
    for (HalfInteger n : degree_range(lambda, lo, hi))
        for (int p = 1; p <= K; ++p)
            for (HalfInteger m : degree_range(nu, lo, hi))
                for (int r = 1; r <= K; ++r) keys.push_back(TableKey{n, p, m, r});

    std::vector<std::map<TargetIndex, GaussianRational>> cells(keys.size());
    parallel_for(keys.size(), jobs, [&](std::size_t k) {
        const TableKey& key = keys[k];
        MeromorphicForm a = basis.element({lambda, key.n, key.p});
        MeromorphicForm b = basis.element({nu, key.m, key.r});
        MeromorphicForm res = op == TableOp::product ? form_product(a, b) : form_bracket(a, b);
        std::map<TargetIndex, GaussianRational> cell;
        for (auto& [idx, c] : expand_in_basis(res, basis)) cell[{idx.degree, idx.point}] = c;
        cells[k] = std::move(cell);
    });
    for (std::size_t k = 0; k < keys.size(); ++k) table.entries[keys[k]] = std::move(cells[k]);
    return table;
}

GradingBounds grading_bounds(const StructureConstantTable& table) {
    bool have = false;
    GradingBounds b;
    for (const auto& [key, cell] : table.entries) {
        for (const auto& [target, c] : cell) {
            long shift = (target.h - (key.n + key.m)).to_integer();
            if (!have) {
                b.lower_shift = b.upper_shift = shift;
                have = true;
            } else {
                b.lower_shift = std::min(b.lower_shift, shift);
                b.upper_shift = std::max(b.upper_shift, shift);
            }
        }
    }
    if (!have) throw domain_error("grading bounds of a table with no nonzero entries");
    return b;
}

}  // namespace kn
