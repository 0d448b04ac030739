#include "kn/forms.hpp"

#include <sstream>

namespace kn {

std::optional<long> form_order_at(const MeromorphicForm& f, const ExtendedPoint& P) {
    auto ord = order_at(f.rep, P);
    if (!ord.has_value()) return std::nullopt;
    if (P.is_infinity()) return *ord - f.weight.twice();  // - 2*weight
    return ord;
}

bool is_admissible(const MeromorphicForm& f, const MarkedSphere& geom) {
    if (f.is_zero()) return true;
    Polynomial den = f.rep.den();
    for (const auto& p : geom.in_points()) {
        long mult = den.root_multiplicity(p);
        if (mult > 0) {
            Polynomial lin = Polynomial::linear_root(p);
            for (long k = 0; k < mult; ++k) den = Polynomial::exact_div(den, lin);
        }
    }
    return den.is_constant();
}

MeromorphicForm form_product(const MeromorphicForm& a, const MeromorphicForm& b) {
    return {a.weight + b.weight, a.rep * b.rep};
}

MeromorphicForm form_bracket(const MeromorphicForm& a, const MeromorphicForm& b) {
    GaussianRational la(-a.weight.to_rational());
    GaussianRational nb(b.weight.to_rational());
    RationalFunction rep = la * (a.rep * b.rep.derivative()) + nb * (b.rep * a.rep.derivative());
    return {a.weight + b.weight + HalfInteger(1), std::move(rep)};
}

MeromorphicForm lie_derivative(const MeromorphicForm& e, const MeromorphicForm& g) {
    if (e.weight != HalfInteger(-1))
        throw weight_mismatch("Lie derivative requires a weight -1 first argument, got " +
                              e.weight.str());
    return form_bracket(e, g);
}

void FormSum::add(const MeromorphicForm& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = parts_.try_emplace(f.weight, f.rep);
    if (!fresh) {
        it->second += f.rep;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

MeromorphicForm FormSum::component(HalfInteger w) const {
    auto it = parts_.find(w);
    if (it == parts_.end()) return {w, RationalFunction::zero()};
    return {w, it->second};
}

FormSum& FormSum::operator+=(const FormSum& o) {
    for (const auto& [w, rep] : o.parts_) add({w, rep});
    return *this;
}

FormSum& FormSum::operator-=(const FormSum& o) {
    for (const auto& [w, rep] : o.parts_) add({w, -rep});
    return *this;
}

std::string FormSum::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, rep] : parts_) {
        if (!first) os << " + ";
        first = false;
        os << MeromorphicForm{w, rep}.str();
    }
    return os.str();
}

FormSum sum_product(const FormSum& a, const FormSum& b) {
    FormSum out;
    for (const auto& [wa, ra] : a.parts())
        for (const auto& [wb, rb] : b.parts()) out.add(form_product({wa, ra}, {wb, rb}));
    return out;
}

FormSum sum_bracket(const FormSum& a, const FormSum& b) {
    FormSum out;
    for (const auto& [wa, ra] : a.parts())
        for (const auto& [wb, rb] : b.parts()) out.add(form_bracket({wa, ra}, {wb, rb}));
    return out;
}

PoissonDefects poisson_defects(const FormSum& a, const FormSum& b, const FormSum& c) {
    PoissonDefects d;
    d.jacobi = sum_bracket(sum_bracket(a, b), c) + sum_bracket(sum_bracket(b, c), a) +
               sum_bracket(sum_bracket(c, a), b);
    d.leibniz = sum_bracket(a, sum_product(b, c)) - (sum_product(sum_bracket(a, b), c) +
                                                     sum_product(b, sum_bracket(a, c)));
    return d;
}

}  // namespace kn
