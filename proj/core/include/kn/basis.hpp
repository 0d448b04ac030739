#pragma once

// Graded bases of the weight-lambda form spaces.  For every weight lambda,
// degree n with n - lambda integral and in-point index p there is a unique
// form
//
//   f_{n,p} = c * prod_i (z - P_i)^{(n + 1 - lambda) - delta_{i,p}}
//
// holomorphic outside the marked points, normalized so that its expansion at
// P_p starts as (z - P_p)^{n - lambda} * (1 + O(z - P_p)).  The scale c is
// fixed by that normalization.  Degree counts the order prescription at the
// in-points; the order at the out-point is then determined.
//
// The pairing sum_i res_{P_i}(f * g) of a lambda-form against a
// (1-lambda)-form makes the bases of complementary weights dual to each
// other, which is what expand_in_basis and the structure-constant tables
// exploit.

#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "kn/forms.hpp"

namespace kn {

struct GradedIndex {
    HalfInteger weight;
    HalfInteger degree;
    int point;  // 1-based in-point index

    friend auto operator<=>(const GradedIndex&, const GradedIndex&) = default;
    std::string str() const {
        return "(" + weight.str() + ";" + degree.str() + "," + std::to_string(point) + ")";
    }
};

struct BasisElement {
    GradedIndex index;
    MeromorphicForm form;
};

// Memoized basis elements over a fixed geometry.  Reads are concurrent;
// construction of a missing element takes the writer lock.
class BasisCache {
  public:
    explicit BasisCache(MarkedSphere geom) : geom_(std::move(geom)) {}

    const MarkedSphere& geometry() const { return geom_; }

    // The basis form f_{n,p} for index (weight, degree, point).  Validates
    // that degree - weight is integral and that point is in range.
    MeromorphicForm element(const GradedIndex& idx) const;

    std::size_t cached_count() const;

  private:
    MeromorphicForm build(const GradedIndex& idx) const;

    MarkedSphere geom_;
    mutable std::shared_mutex mu_;
    mutable std::map<GradedIndex, MeromorphicForm> cache_;
};

// sum_i res_{P_i}(f.rep * g.rep): defined when the weights add to 1.
GaussianRational kn_pairing(const MeromorphicForm& f, const MeromorphicForm& g,
                            const MarkedSphere& geom);

// Exact finite expansion of an admissible form in the graded basis of its
// weight.  Support bounds come from the pole orders of f: degrees below
// lambda + min_i ord_{P_i}(rep) or above lambda + floor(-ord_out(rep)/K)
// cannot contribute.
std::map<GradedIndex, GaussianRational> expand_in_basis(const MeromorphicForm& f,
                                                        const BasisCache& basis);

// True when ord_{P_i}(f) >= n - lambda at every in-point, i.e. f lies in the
// degree-n filtration subspace of its weight.
bool filtration_membership(const MeromorphicForm& f, HalfInteger n, const MarkedSphere& geom);

// Splits f into (plus, zero, minus) along basis degrees: plus collects
// degrees > 0, zero the critical strip -R..0 (R = number of extension
// degrees kept in the middle), minus the rest.
struct TriangularParts {
    MeromorphicForm plus;
    MeromorphicForm zero;
    MeromorphicForm minus;
};
TriangularParts triangular_decompose(const MeromorphicForm& f, const BasisCache& basis, long R);

enum class TableOp { product, bracket };

struct TableKey {
    HalfInteger n;
    int p;
    HalfInteger m;
    int r;
    friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

struct TargetIndex {
    HalfInteger h;
    int s;
    friend auto operator<=>(const TargetIndex&, const TargetIndex&) = default;
};

struct StructureConstantTable {
    TableOp op;
    HalfInteger lambda;
    HalfInteger nu;
    HalfInteger window_lo;
    HalfInteger window_hi;
    std::map<TableKey, std::map<TargetIndex, GaussianRational>> entries;
};

// Structure constants of f_{n,p} op f_{m,r} for degrees in [lo, hi]; each
// cell is expanded completely (the expansion support is finite and computed
// from pole orders, so cells carry no truncation error).  jobs > 1 computes
// cells in parallel.
StructureConstantTable structure_constants(const BasisCache& basis, HalfInteger lambda,
                                           HalfInteger nu, TableOp op, HalfInteger lo,
                                           HalfInteger hi, unsigned jobs = 1);

// Almost-graded bounds: extremes of h - (n + m) over all nonzero terms.
struct GradingBounds {
    long lower_shift = 0;
    long upper_shift = 0;
};
GradingBounds grading_bounds(const StructureConstantTable& table);

}  // namespace kn
