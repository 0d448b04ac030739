#pragma once

// Residue-defined 2-cocycles.  All of them are integrals over an integer
// combination C of small circles around the in-points, evaluated exactly as
// multiplicity-weighted residue sums:
//
//   functions      psi1(g,h)   = (1/2 pi i) \oint_C g dh
//   currents       psi2(x(x)g, y(x)h) = beta(x,y) psi1(g,h)
//   vector fields  psi3(e,f)   = \oint_C [ (e'''f - e f''')/2 - R (e'f - e f') ] dz
//   mixing         psi4(e,g)   = \oint_C (e g'' + T e g') dz  (antisymmetrized on D1)
//   superalgebra   Phi(x,y)    = psi3 on even pairs,
//                                -\oint_C (phi'' psi + phi psi'' - R phi psi) dz on odd
//                                pairs, 0 on mixed pairs.
//
// R is a projective and T an affine reference connection; they make the
// integrands well-defined quadratic differentials / 1-forms.  The 1/(2 pi i)
// factor is absorbed into the residue normalization.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kn/algebras.hpp"
#include "kn/basis.hpp"
#include "kn/geometry.hpp"

namespace kn {

// Multiplicity-weighted residue sum of a 1-form over the cycle class.
GaussianRational integrate_over(const CycleClass& cycle, const MeromorphicForm& omega,
                                const MarkedSphere& geom);

GaussianRational psi1(const MeromorphicForm& g, const MeromorphicForm& h, const CycleClass& cycle,
                      const MarkedSphere& geom);

GaussianRational psi2(const FiniteLieAlgebra& alg, const CurrentElement& a,
                      const CurrentElement& b, const CycleClass& cycle, const MarkedSphere& geom);

GaussianRational psi3(const MeromorphicForm& e, const MeromorphicForm& f,
                      const ProjectiveConnection& R, const CycleClass& cycle,
                      const MarkedSphere& geom);

// The raw mixing integral; on D1 pairs it enters antisymmetrized.
GaussianRational psi4(const MeromorphicForm& e, const MeromorphicForm& g,
                      const AffineConnection& T, const CycleClass& cycle,
                      const MarkedSphere& geom);

// Linear combination of the three D1 cocycles evaluated on pairs of first
// order operators; the mixing part is psi4(e_x, g_y) - psi4(e_y, g_x).
struct D1Cocycle {
    GaussianRational c_fn;
    GaussianRational c_vec;
    GaussianRational c_mix;
    ProjectiveConnection R;
    AffineConnection T;
    CycleClass cycle;
};
GaussianRational d1_cocycle(const D1Cocycle& spec, const D1Element& x, const D1Element& y,
                            const MarkedSphere& geom);

GaussianRational super_phi(const SuperElement& x, const SuperElement& y,
                           const ProjectiveConnection& R, const CycleClass& cycle,
                           const MarkedSphere& geom);

// ---- cocycle conditions -------------------------------------------------

// psi([x,y],z) + psi([y,z],x) + psi([z,x],y) for a bilinear form given as a
// callable; the bracket is passed in the same way so each algebra reuses it.
template <class T>
GaussianRational cocycle_defect(const std::function<T(const T&, const T&)>& bracket,
                                const std::function<GaussianRational(const T&, const T&)>& psi,
                                const T& x, const T& y, const T& z) {
    return psi(bracket(x, y), z) + psi(bracket(y, z), x) + psi(bracket(z, x), y);
}

// Graded version for homogeneous super elements:
// (-1)^{|x||z|} c(x,[y,z]) + (-1)^{|y||x|} c(y,[z,x]) + (-1)^{|z||y|} c(z,[x,y]).
GaussianRational super_cocycle_defect(
    const std::function<GaussianRational(const SuperElement&, const SuperElement&)>& c,
    const SuperElement& x, const SuperElement& y, const SuperElement& z);

// The mixed parity instance written out: c(e,[phi,psi]) - c(phi, e.psi) - c(psi, e.phi).
GaussianRational super_mixed_condition_defect(
    const std::function<GaussianRational(const SuperElement&, const SuperElement&)>& c,
    const MeromorphicForm& e, const MeromorphicForm& phi, const MeromorphicForm& psi);

// psi1(e.g, h) + psi1(g, e.h): vanishes for every vector field e exactly when
// psi1 is invariant under the vector-field action.
GaussianRational l_invariance_defect(const MeromorphicForm& e, const MeromorphicForm& g,
                                     const MeromorphicForm& h, const CycleClass& cycle,
                                     const MarkedSphere& geom);

// ---- locality scans ------------------------------------------------------

enum class AlgebraKind { functions, vector_fields, d1, current, super_alg };

struct LocalityWindow {
    bool empty = true;       // no nonzero value seen in the scan
    HalfInteger M1;          // min n+m with nonzero value
    HalfInteger M2;          // max n+m with nonzero value
    long pairs_scanned = 0;
    long nonzero_values = 0;
};

// Evaluates the cocycle on all pairs of homogeneous basis elements of the
// algebra kind with degrees in [lo, hi] and reports the observed support
// window of n+m.  For the current kind an algebra must be supplied.
struct ScanConfig {
    AlgebraKind kind;
    HalfInteger lo;
    HalfInteger hi;
    const FiniteLieAlgebra* algebra = nullptr;
    unsigned jobs = 1;
};

struct CocycleSet {
    // Which integrals to use per kind; the combination is fixed by kind.
    CycleClass cycle;
    ProjectiveConnection R;
    AffineConnection T;
};

LocalityWindow locality_scan(const CocycleSet& spec, const ScanConfig& config,
                             const BasisCache& basis);

// ---- central extensions ---------------------------------------------------

template <class T>
struct Extended {
    T base;
    GaussianRational central;
};

// Central term certification: returns a description of the first violating
// triple, or nothing if the 2-cocycle condition holds on all given triples.
template <class T>
std::optional<std::string> certify_cocycle(
    const std::function<T(const T&, const T&)>& bracket,
    const std::function<GaussianRational(const T&, const T&)>& psi, const std::vector<T>& sample,
    const std::function<std::string(const T&)>& describe) {
    for (const T& x : sample)
        for (const T& y : sample)
            for (const T& z : sample) {
                if (!cocycle_defect<T>(bracket, psi, x, y, z).is_zero())
                    return "cocycle condition fails on (" + describe(x) + ", " + describe(y) +
                           ", " + describe(z) + ")";
            }
    return std::nullopt;
}

// One-dimensional central extension with bracket
// [(x,a),(y,b)] = ([x,y], scale * psi(x,y)); construction runs the
// certification sweep first and throws defect_error with the witness.
template <class T>
class CentralExtension {
  public:
    using BracketFn = std::function<T(const T&, const T&)>;
    using CocycleFn = std::function<GaussianRational(const T&, const T&)>;

    CentralExtension(BracketFn bracket, CocycleFn psi, GaussianRational scale,
                     const std::vector<T>& certification_sample,
                     const std::function<std::string(const T&)>& describe)
        : bracket_(std::move(bracket)), psi_(std::move(psi)), scale_(std::move(scale)) {
        auto witness = certify_cocycle<T>(bracket_, psi_, certification_sample, describe);
        if (witness) throw defect_error(*witness);
    }

    Extended<T> bracket(const Extended<T>& x, const Extended<T>& y) const {
        return {bracket_(x.base, y.base), scale_ * psi_(x.base, y.base)};
    }
    const GaussianRational& scale() const { return scale_; }

  private:
    BracketFn bracket_;
    CocycleFn psi_;
    GaussianRational scale_;
};

}  // namespace kn
