#include <doctest.h>

#include "kn/algebras.hpp"

using namespace kn;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }
RationalFunction zf(long e) { return RationalFunction::z().pow(e); }
MeromorphicForm fn(RationalFunction r) { return form(HalfInteger(0), std::move(r)); }
MeromorphicForm vec(RationalFunction r) { return form(HalfInteger(-1), std::move(r)); }
MeromorphicForm spin(RationalFunction r) {
    return form(HalfInteger::from_twice(-1), std::move(r));
}
}  // namespace

TEST_CASE("first order operator bracket and action") {
    D1Element x = D1Element::make(fn(zf(2)), vec(zf(3)));
    D1Element y = D1Element::make(fn(zf(1)), vec(zf(1)));
    D1Element b = d1_bracket(x, y);
    // (e.h - f.g, [e,f]) with e = z^3 d/dz, f = z d/dz, g = z^2, h = z
    CHECK(b.fn.rep == zf(3) - q(2) * zf(2));
    CHECK(b.vec.rep == q(-2) * zf(3));

    // functions commute; a field acts on a function by derivation
    CHECK(d1_bracket(D1Element::from_function(fn(zf(2))),
                     D1Element::from_function(fn(zf(5))))
              .is_zero());
    D1Element fb = d1_bracket(D1Element::from_vector_field(vec(zf(3))),
                              D1Element::from_function(fn(zf(1))));
    CHECK(fb.fn.rep == zf(3));
    CHECK(fb.vec.is_zero());

    MeromorphicForm u = form(HalfInteger(1), zf(1));
    CHECK(d1_action(x, u).rep == q(5) * zf(3));

    D1Element z = D1Element::make(fn(RationalFunction::one() - zf(1)), vec(zf(-1) + zf(2)));
    CHECK(d1_jacobi_defect(x, y, z).is_zero());
    CHECK((d1_bracket(x, y) == D1Element{b.fn, b.vec}));
    CHECK_FALSE(d1_bracket(y, x) == b);
}

TEST_CASE("super bracket parts") {
    SuperElement e = SuperElement::from_even(vec(zf(3)));
    SuperElement phi = SuperElement::from_odd(spin(zf(2)));
    SuperElement psi = SuperElement::from_odd(spin(zf(1)));

    CHECK(e.parity() == 0);
    CHECK(phi.parity() == 1);
    CHECK(SuperElement{}.is_zero());
    CHECK_THROWS_AS(SuperElement::make(vec(zf(0)), spin(zf(0))).parity(), domain_error);

    // even acting on odd is the half-form Lie derivative
    SuperElement m = super_bracket(e, phi);
    CHECK(m.even.is_zero());
    CHECK(m.odd.rep == q(1, 2) * zf(4));
    // and the mixed bracket is antisymmetric
    SuperElement mrev = super_bracket(phi, e);
    CHECK(mrev.odd.rep == q(-1, 2) * zf(4));

    // two odds multiply symmetrically into a vector field
    SuperElement oo = super_bracket(phi, psi);
    CHECK(oo.odd.is_zero());
    CHECK(oo.even.rep == zf(3));
    CHECK(super_bracket(psi, phi) == oo);

    for (const SuperElement& a : {e, phi, psi})
        for (const SuperElement& b : {e, phi, psi})
            for (const SuperElement& c : {e, phi, psi})
                CHECK(super_jacobi_defect(a, b, c).is_zero());
}

TEST_CASE("jordan superalgebra product") {
    JordanElement x{fn(zf(2)), spin(zf(1))};
    JordanElement y{fn(zf(3)), spin(zf(0))};

    JordanElement p = jordan_product(x, y);
    CHECK(p.fn.rep == zf(5) - q(1, 2) * RationalFunction::one());
    CHECK(p.odd.rep == zf(2) + zf(4));

    JordanElement r = jordan_product(y, x);
    CHECK(r.fn.rep == zf(5) + q(1, 2) * RationalFunction::one());
    CHECK(r.odd == p.odd);

    JordanElement h = jordan_product(x, y, true);
    CHECK(h.odd.rep == q(1, 2) * (zf(2) + zf(4)));
    CHECK(h.fn == p.fn);

    // homogeneous parts: functions commute, odds anticommute
    JordanElement ff = jordan_product(JordanElement::from_function(fn(zf(1))),
                                      JordanElement::from_function(fn(zf(4))));
    CHECK(ff.fn.rep == zf(5));
    CHECK(ff.odd.is_zero());
    JordanElement uv = jordan_product(JordanElement::from_odd(spin(zf(2))),
                                      JordanElement::from_odd(spin(zf(3))));
    JordanElement vu = jordan_product(JordanElement::from_odd(spin(zf(3))),
                                      JordanElement::from_odd(spin(zf(2))));
    CHECK(uv.fn.rep == q(1, 2) * zf(4));
    CHECK(vu.fn.rep == q(-1, 2) * zf(4));
}

TEST_CASE("matrix lie algebras validate and expand commutators") {
    for (const char* name : {"gl2", "sl2", "so3", "sp2", "sp4"}) {
        FiniteLieAlgebra g = FiniteLieAlgebra::by_name(name);
        CHECK(g.name() == name);
        CHECK(g.has_matrices());
        g.validate();

        std::size_t n = g.matrices()[0].rows();
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                QiMatrix lhs = g.matrices()[i] * g.matrices()[j] -
                               g.matrices()[j] * g.matrices()[i];
                QiMatrix rhs(n, n);
                for (const auto& [k, c] : g.bracket_coeffs(i, j))
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) rhs(r, s) += c * g.matrices()[k](r, s);
                CHECK(lhs == rhs);
                CHECK(g.beta(i, j) == (g.matrices()[i] * g.matrices()[j]).trace());
                CHECK(g.beta(i, j) == g.beta(j, i));
            }
    }
    CHECK(FiniteLieAlgebra::gl(2).dim() == 4);
    CHECK(FiniteLieAlgebra::sl(2).dim() == 3);
    CHECK(FiniteLieAlgebra::so(3).dim() == 3);
    CHECK(FiniteLieAlgebra::sp(4).dim() == 10);
    CHECK(!determinant(FiniteLieAlgebra::sl(2).beta_matrix()).is_zero());
    CHECK_THROWS_AS(FiniteLieAlgebra::by_name("e8"), parse_error);
    CHECK_THROWS_AS(FiniteLieAlgebra::sp(3), domain_error);

    FiniteLieAlgebra ab = FiniteLieAlgebra::abelian(3);
    CHECK(!ab.has_matrices());
    ab.validate();
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(ab.bracket_coeffs(i, i).empty());
        CHECK(ab.beta(i, i) == q(1));
    }
}

TEST_CASE("current algebra bracket") {
    FiniteLieAlgebra g = FiniteLieAlgebra::sl(2);
    CurrentElement a = CurrentElement::pure(g, 0, fn(zf(1)));
    CurrentElement b = CurrentElement::pure(g, 1, fn(RationalFunction::one()));

    CurrentElement ab = current_bracket(g, a, b);
    for (std::size_t k = 0; k < g.dim(); ++k) {
        auto it = g.bracket_coeffs(0, 1).find(k);
        GaussianRational c = it == g.bracket_coeffs(0, 1).end() ? q(0) : it->second;
        CHECK(ab.comps[k].rep == c * zf(1));
    }
    CHECK(!ab.is_zero());

    CurrentElement c = CurrentElement::pure(g, 2, fn(zf(2) - zf(-1)));
    CHECK(current_jacobi_defect(g, a, b, c).is_zero());
    CHECK(current_jacobi_defect(g, a + b, b + c, c).is_zero());
    CHECK(CurrentElement::zero(g).is_zero());
    CHECK((CurrentElement::zero(g) + a) == a);
}

TEST_CASE("homogeneous subspace dimensions") {
    MarkedSphere geom({q(0), q(1), q(-1)});
    HomogeneousDimensions dims = homogeneous_dimensions(geom);
    CHECK(dims.functions == 3);
    CHECK(dims.vector_fields == 3);
    CHECK(dims.super_even_odd == 6);
    CHECK(dims.d1 == 9);
    CHECK(dims.current(FiniteLieAlgebra::sl(2)) == 9);
}

TEST_CASE("exact linear algebra") {
    QiMatrix A(2, 2);
    A(0, 0) = q(1), A(0, 1) = q(2), A(1, 0) = q(3), A(1, 1) = q(4);
    CHECK(determinant(A) == q(-2));
    CHECK(rank(A) == 2);
    auto sol = solve_linear(A, {q(5), q(11)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == q(1));
    CHECK((*sol)[1] == q(2));

    QiMatrix S(2, 2);
    S(0, 0) = q(1), S(0, 1) = q(2), S(1, 0) = q(2), S(1, 1) = q(4);
    CHECK(determinant(S) == q(0));
    CHECK(rank(S) == 1);
    CHECK(!solve_linear(S, {q(1), q(0)}).has_value());
    auto ns = nullspace(S);
    REQUIRE(ns.size() == 1);
    CHECK(S * QiMatrix(2, 1, q(0)) == QiMatrix(2, 1, q(0)));
    QiMatrix v(2, 1);
    v(0, 0) = ns[0][0], v(1, 0) = ns[0][1];
    CHECK((S * v).is_zero());

    QiMatrix C(2, 2);
    C(0, 0) = GaussianRational::i(), C(1, 1) = GaussianRational::i();
    CHECK(determinant(C) == q(-1));
    CHECK(C.trace() == q(2) * GaussianRational::i());
    CHECK(QiMatrix::identity(3).trace() == q(3));
    CHECK(A.transposed()(0, 1) == q(3));
}
