#pragma once

// Semi-infinite wedge (fermionic Fock) spaces over the graded form bases.
// A monomial is f_{i_1} ^ f_{i_2} ^ ... with strictly increasing slot
// indices (ordered by degree, then in-point) that eventually run through
// every index from some point on; it is stored as the finite prefix of
// exceptional slots plus the first index of the terminal full tail.
//
// Wedge and contraction operators give the Clifford (b-c) structure; first
// order differential operators act slotwise with a normal-ordered diagonal,
// regularized against a reference vacuum, which turns the action into a
// projective representation whose central defect rep_cocycle extracts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kn/algebras.hpp"
#include "kn/basis.hpp"

namespace kn {

struct SlotIndex {
    HalfInteger degree;
    int point;  // 1-based
    friend auto operator<=>(const SlotIndex&, const SlotIndex&) = default;
    std::string str() const { return "(" + degree.str() + "," + std::to_string(point) + ")"; }
};

SlotIndex slot_successor(SlotIndex s, int K);
SlotIndex slot_predecessor(SlotIndex s, int K);

class WedgeMonomial {
  public:
    // Canonicalizes: prefix sorted strictly increasing, all below tail_start,
    // and a prefix run ending right before tail_start is absorbed into the
    // tail.  Throws on duplicates.
    WedgeMonomial(HalfInteger weight, std::vector<SlotIndex> prefix, SlotIndex tail_start, int K);

    // The vacuum of degree T: every slot from (T, 1) on is occupied.
    static WedgeMonomial vacuum(HalfInteger weight, HalfInteger T);

    HalfInteger weight() const { return weight_; }
    const std::vector<SlotIndex>& prefix() const { return prefix_; }
    const SlotIndex& tail_start() const { return tail_; }

    bool occupied(const SlotIndex& idx) const;
    // 1-based position of an occupied slot in the ordered sequence.
    long position(const SlotIndex& idx, int K) const;
    // Largest unoccupied degree (every degree above it, in every point, is
    // eventually occupied only within the tail).
    SlotIndex max_missing(int K) const;
    // Occupied slots with index strictly below bound (finite list).
    std::vector<SlotIndex> occupied_below(const SlotIndex& bound, int K) const;

    // Removes an occupied slot; the sign is (-1)^{position-1}.
    std::pair<WedgeMonomial, int> remove(const SlotIndex& idx, int K) const;
    // Front wedge by slot idx; sign sorts it into place.  nullopt if occupied.
    std::optional<std::pair<WedgeMonomial, int>> insert(const SlotIndex& idx, int K) const;

    friend auto operator<=>(const WedgeMonomial&, const WedgeMonomial&) = default;
    std::string str() const;

  private:
    HalfInteger weight_;
    std::vector<SlotIndex> prefix_;
    SlotIndex tail_;
};

// Finite linear combination of monomials of one weight.
class FockVector {
  public:
    FockVector() = default;
    explicit FockVector(const WedgeMonomial& m) { terms_[m] = GaussianRational(1); }

    void add(const WedgeMonomial& m, const GaussianRational& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<WedgeMonomial, GaussianRational>& terms() const { return terms_; }
    GaussianRational coefficient(const WedgeMonomial& m) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const GaussianRational& c, FockVector v);
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::map<WedgeMonomial, GaussianRational> terms_;
};

class FockSpace {
  public:
    // ref_vacuum_degree fixes the reference for the normal-ordered diagonal.
    FockSpace(const BasisCache& basis, HalfInteger weight, HalfInteger ref_vacuum_degree);

    const BasisCache& basis() const { return basis_; }
    HalfInteger weight() const { return lambda_; }
    HalfInteger ref_degree() const { return ref_T_; }
    int K() const { return basis_.geometry().K(); }

    WedgeMonomial vacuum(HalfInteger T) const { return WedgeMonomial::vacuum(lambda_, T); }

    // f ^ (.): f must be a weight-lambda form; expands f and wedges slotwise.
    FockVector wedge_op(const MeromorphicForm& f, const FockVector& v) const;
    // Contraction against a weight-(1-lambda) form through the duality
    // pairing; kills the paired slots with alternating signs.
    FockVector contraction_op(const MeromorphicForm& g, const FockVector& v) const;

  private:
    const BasisCache& basis_;
    HalfInteger lambda_;
    HalfInteger ref_T_;
};

// Action of a first order differential operator on a Fock space, with the
// column expansions of the operator cached across applications.
class FockOperator {
  public:
    FockOperator(const FockSpace& space, D1Element op);

    const D1Element& op() const { return op_; }
    FockVector apply(const FockVector& v) const;

  private:
    const std::map<SlotIndex, GaussianRational>& column(const SlotIndex& j) const;

    const FockSpace& space_;
    D1Element op_;
    bool zero_ = true;
    HalfInteger lo_shift_;  // lowest degree in the expansions of the op parts
    mutable std::map<SlotIndex, std::map<SlotIndex, GaussianRational>> cols_;
};

// Central defect of the projective action:
//   [rho(x), rho(y)] - rho([x,y]) = chi(x,y) * id.
// Verifies on every probe that the defect vector is the probe itself scaled
// by one common chi and returns that scalar; throws defect_error otherwise.
GaussianRational rep_cocycle(const FockSpace& space, const D1Element& x, const D1Element& y,
                             const std::vector<WedgeMonomial>& probes);

// All monomials whose slots of degree in [lo, hi] are chosen freely, with
// everything below lo empty and everything above hi occupied.
std::vector<WedgeMonomial> window_monomials(const BasisCache& basis, HalfInteger weight,
                                            HalfInteger lo, HalfInteger hi);

}  // namespace kn
