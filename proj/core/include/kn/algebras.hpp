#pragma once

// Algebraic structures built on top of the form spaces:
//   - D1: pairs (function, vector field) with the mixed bracket of first
//     order differential operators,
//   - the Lie superalgebra on (vector field, weight -1/2 form) pairs,
//   - the Jordan superalgebra on (function, weight -1/2 form) pairs,
//   - finite-dimensional matrix Lie algebras and the current algebra g (x) A.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kn/basis.hpp"
#include "kn/forms.hpp"
#include "kn/linalg.hpp"

namespace kn {

// ---- first order differential operators -------------------------------

struct D1Element {
    MeromorphicForm fn;   // weight 0
    MeromorphicForm vec;  // weight -1

    static D1Element from_function(MeromorphicForm g);
    static D1Element from_vector_field(MeromorphicForm e);
    static D1Element make(MeromorphicForm g, MeromorphicForm e);

    bool is_zero() const { return fn.is_zero() && vec.is_zero(); }
    friend bool operator==(const D1Element&, const D1Element&) = default;
    std::string str() const { return "(" + fn.rep.str() + ", " + vec.rep.str() + ")"; }
};

// [(g,e),(h,f)] = (e.h - f.g, [e,f])
D1Element d1_bracket(const D1Element& x, const D1Element& y);

// Action of (g,e) on a weight-lambda form: e.u + g*u.
MeromorphicForm d1_action(const D1Element& x, const MeromorphicForm& u);

D1Element d1_jacobi_defect(const D1Element& a, const D1Element& b, const D1Element& c);

// ---- Lie superalgebra --------------------------------------------------

struct SuperElement {
    MeromorphicForm even;  // weight -1 (vector field)
    MeromorphicForm odd;   // weight -1/2

    static SuperElement from_even(MeromorphicForm e);
    static SuperElement from_odd(MeromorphicForm phi);
    static SuperElement make(MeromorphicForm e, MeromorphicForm phi);

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
    bool is_homogeneous() const { return even.is_zero() || odd.is_zero(); }
    // 0 = even, 1 = odd; requires homogeneity (zero counts as even).
    int parity() const;
    friend bool operator==(const SuperElement&, const SuperElement&) = default;
    std::string str() const { return "(" + even.rep.str() + " | " + odd.rep.str() + ")"; }
};

// [(e,phi),(f,psi)] = ([e,f] + phi*psi, e.psi - f.phi): the even-even part
// is the vector-field bracket, two odd elements multiply pointwise into a
// vector field, and the mixed part is the Lie derivative action on -1/2
// forms.
SuperElement super_bracket(const SuperElement& x, const SuperElement& y);

// Graded Jacobi defect (-1)^{|a||c|}[a,[b,c]] + cyclic for homogeneous
// arguments.
SuperElement super_jacobi_defect(const SuperElement& a, const SuperElement& b,
                                 const SuperElement& c);

// ---- Jordan superalgebra ----------------------------------------------

struct JordanElement {
    MeromorphicForm fn;   // weight 0
    MeromorphicForm odd;  // weight -1/2

    static JordanElement from_function(MeromorphicForm g);
    static JordanElement from_odd(MeromorphicForm phi);

    bool is_zero() const { return fn.is_zero() && odd.is_zero(); }
    friend bool operator==(const JordanElement&, const JordanElement&) = default;
};

// (f,phi) o (g,psi) = (f*g + [phi,psi], f*psi + g*phi).  With
// half_mixed = true the mixed products carry an extra 1/2, the common
// rescaling of the odd action.
JordanElement jordan_product(const JordanElement& x, const JordanElement& y,
                             bool half_mixed = false);

// ---- finite-dimensional Lie algebras ------------------------------------

class FiniteLieAlgebra {
  public:
    // From explicit matrix generators; structure constants are obtained by
    // expanding commutators in the generator basis (must close), and beta is
    // the trace form of the representation.
    static FiniteLieAlgebra from_matrices(std::string name, std::vector<QiMatrix> basis);

    static FiniteLieAlgebra abelian(std::size_t dim);
    static FiniteLieAlgebra gl(std::size_t n);
    static FiniteLieAlgebra sl(std::size_t n);
    static FiniteLieAlgebra so(std::size_t n);
    static FiniteLieAlgebra sp(std::size_t n);  // n even
    // Lookup by name: "abelian<d>", "gl<n>", "sl<n>", "so<n>", "sp<n>".
    static FiniteLieAlgebra by_name(const std::string& name);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    bool has_matrices() const { return !matrices_.empty(); }
    const std::vector<QiMatrix>& matrices() const { return matrices_; }

    // Coefficients of [x_i, x_j] in the basis.
    const std::map<std::size_t, GaussianRational>& bracket_coeffs(std::size_t i,
                                                                  std::size_t j) const;
    const GaussianRational& beta(std::size_t i, std::size_t j) const { return beta_(i, j); }
    const QiMatrix& beta_matrix() const { return beta_; }

    // Checks antisymmetry, the Jacobi identity and invariance plus symmetry
    // of beta; throws defect_error with a witness on failure.
    void validate() const;

  private:
    FiniteLieAlgebra() = default;
    std::string name_;
    std::size_t dim_ = 0;
    std::vector<QiMatrix> matrices_;  // empty for abstract (abelian) algebras
    std::vector<std::vector<std::map<std::size_t, GaussianRational>>> sc_;
    QiMatrix beta_;
};

// ---- current algebra ----------------------------------------------------

// Element of g (x) A: one weight-0 form per basis direction of g.
struct CurrentElement {
    std::vector<MeromorphicForm> comps;

    static CurrentElement zero(const FiniteLieAlgebra& g);
    static CurrentElement pure(const FiniteLieAlgebra& g, std::size_t direction,
                               MeromorphicForm f);

    bool is_zero() const;
    friend bool operator==(const CurrentElement&, const CurrentElement&) = default;

    CurrentElement& operator+=(const CurrentElement& o);
    friend CurrentElement operator+(CurrentElement a, const CurrentElement& b) { return a += b; }
};

// [x (x) f, y (x) g] = [x,y] (x) fg, extended bilinearly.
CurrentElement current_bracket(const FiniteLieAlgebra& g, const CurrentElement& a,
                               const CurrentElement& b);

CurrentElement current_jacobi_defect(const FiniteLieAlgebra& g, const CurrentElement& a,
                                     const CurrentElement& b, const CurrentElement& c);

// ---- almost-graded dimension counts -------------------------------------

// Dimension of the degree-n homogeneous subspace over K in-points:
// K for functions, vector fields and any single weight, 2K for the
// superalgebra, 3K for D1, K*dim(g) for currents.
struct HomogeneousDimensions {
    long functions;
    long vector_fields;
    long d1;
    long super_even_odd;  // dim S_n counting both parities at matching degree
    long current(const FiniteLieAlgebra& g) const { return functions * static_cast<long>(g.dim()); }
};
HomogeneousDimensions homogeneous_dimensions(const MarkedSphere& geom);

}  // namespace kn
