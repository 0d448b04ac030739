#pragma once

// Meromorphic lambda-forms f(z) (dz)^lambda on the sphere, represented by
// their rational coefficient function in the affine chart.  Products
// multiply representatives and add weights; the Poisson bracket of an
// s(dz)^lam and a t(dz)^nu is (-lam*s*t' + nu*t*s')(dz)^{lam+nu+1}, which for
// lam = -1 specializes to the Lie derivative of a nu-form along a vector
// field.

#include <map>
#include <string>

#include "kn/geometry.hpp"
#include "kn/half_integer.hpp"
#include "kn/rational_function.hpp"

namespace kn {

struct MeromorphicForm {
    HalfInteger weight;
    RationalFunction rep;

    bool is_zero() const { return rep.is_zero(); }

    friend bool operator==(const MeromorphicForm& a, const MeromorphicForm& b) {
        return a.weight == b.weight && a.rep == b.rep;
    }
    friend bool operator!=(const MeromorphicForm& a, const MeromorphicForm& b) { return !(a == b); }

    std::string str() const { return "(" + rep.str() + ")(dz)^{" + weight.str() + "}"; }
};

inline MeromorphicForm form(HalfInteger weight, RationalFunction rep) {
    return {weight, std::move(rep)};
}

// Order of the form at a point of the sphere; at the out-point the (dz)^w
// factor shifts the order of the representative by -2*weight (from
// dz = -w^{-2} dw).  std::nullopt encodes +infinity (zero form).
std::optional<long> form_order_at(const MeromorphicForm& f, const ExtendedPoint& P);

// True when all finite poles of the representative sit at in-points; poles
// at the out-point are always allowed.
bool is_admissible(const MeromorphicForm& f, const MarkedSphere& geom);

// Pointwise product, weight adds.
MeromorphicForm form_product(const MeromorphicForm& a, const MeromorphicForm& b);

// Poisson-type bracket of weights (lam, nu), weight lam+nu+1.
MeromorphicForm form_bracket(const MeromorphicForm& a, const MeromorphicForm& b);

// Lie derivative of g along the vector field e (weight -1 required):
// (e g' + weight(g) g e')(dz)^{weight(g)}.
MeromorphicForm lie_derivative(const MeromorphicForm& e, const MeromorphicForm& g);

// Finite sum of homogeneous forms of distinct weights; the value type for
// bilinear operations that mix weights.
class FormSum {
  public:
    FormSum() = default;
    explicit FormSum(const MeromorphicForm& f) { add(f); }

    void add(const MeromorphicForm& f);
    bool is_zero() const { return parts_.empty(); }
    const std::map<HalfInteger, RationalFunction>& parts() const { return parts_; }
    MeromorphicForm component(HalfInteger w) const;

    FormSum& operator+=(const FormSum& o);
    FormSum& operator-=(const FormSum& o);
    friend FormSum operator+(FormSum a, const FormSum& b) { return a += b; }
    friend FormSum operator-(FormSum a, const FormSum& b) { return a -= b; }
    friend bool operator==(const FormSum& a, const FormSum& b) { return a.parts_ == b.parts_; }

    std::string str() const;

  private:
    std::map<HalfInteger, RationalFunction> parts_;
};

FormSum sum_product(const FormSum& a, const FormSum& b);
FormSum sum_bracket(const FormSum& a, const FormSum& b);

struct PoissonDefects {
    FormSum jacobi;   // [[a,b],c] + [[b,c],a] + [[c,a],b]
    FormSum leibniz;  // [a, b*c] - [a,b]*c - b*[a,c]
    bool all_zero() const { return jacobi.is_zero() && leibniz.is_zero(); }
};

PoissonDefects poisson_defects(const FormSum& a, const FormSum& b, const FormSum& c);

}  // namespace kn
