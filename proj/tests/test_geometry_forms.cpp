#include <doctest.h>

#include "kn/forms.hpp"
#include "kn/geometry.hpp"

using namespace kn;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }
Polynomial zpow(long e) { return Polynomial::monomial(q(1), static_cast<std::size_t>(e)); }
RationalFunction zf(long e) { return RationalFunction::z().pow(e); }
HalfInteger half(long t) { return HalfInteger::from_twice(t); }
}  // namespace

TEST_CASE("marked spheres reject degenerate data") {
    MarkedSphere geom({q(0), q(1), q(-1)});
    CHECK(geom.K() == 3);
    CHECK(geom.point(2) == q(1));
    CHECK(geom.is_in_point(q(-1)));
    CHECK(!geom.is_in_point(q(5)));
    CHECK_THROWS_AS(MarkedSphere({}), domain_error);
    CHECK_THROWS_AS(MarkedSphere({q(1), q(1)}), domain_error);
    CHECK_THROWS_AS(geom.point(0), domain_error);
    CHECK_THROWS_AS(geom.point(4), domain_error);
}

TEST_CASE("connection validation confines poles to the out-point") {
    MarkedSphere geom({q(0), q(1)});
    CHECK(validate_connection(ConnectionKind::projective, RationalFunction::zero(), geom).ok);
    CHECK(validate_connection(ConnectionKind::projective, RationalFunction(zpow(2)), geom).ok);
    // pole at an in-point is rejected
    ConnectionReport bad =
        validate_connection(ConnectionKind::projective, zf(-1), geom);
    CHECK(!bad.ok);
    CHECK(bad.violations.front().point == 1);
    // affine connections may keep a simple pole at infinity but not a double
    CHECK(validate_connection(ConnectionKind::affine, RationalFunction(zpow(1)), geom).ok);
    CHECK(!validate_connection(ConnectionKind::affine, RationalFunction(zpow(2)), geom).ok);
    CHECK(validate_connection(ConnectionKind::projective, RationalFunction(zpow(2)), geom).ok);
}

TEST_CASE("transformation laws reproduce hand values") {
    RationalFunction h = RationalFunction::z().pow(2);
    // R = 0 transforms into the Schwarzian itself
    CHECK(transform_projective(RationalFunction::zero(), h) ==
          GaussianRational(Rational(-3, 2)) * zf(-2));
    // T = 0 transforms into h''/h' = 1/z
    CHECK(transform_affine(RationalFunction::zero(), h) == zf(-1));
    // a Moebius change keeps R = 0
    RationalFunction moebius(zpow(1), zpow(1) - Polynomial::one());
    CHECK(transform_projective(RationalFunction::zero(), moebius).is_zero());
}

TEST_CASE("cycle classes weight the residue sum") {
    MarkedSphere geom({q(0), q(1)});
    CycleClass cs = CycleClass::separating(geom);
    CHECK(cs.multiplicities() == std::vector<long>{1, 1});
    CycleClass c2 = CycleClass::single(geom, 2);
    CHECK(c2.multiplicities() == std::vector<long>{0, 1});
    CHECK(c2.multiplicity(2) == 1);
    CHECK_THROWS_AS(CycleClass::single(geom, 3), domain_error);
}

TEST_CASE("form orders include the weight shift at infinity") {
    // e = z^2 d/dz: order 2 at 0, order -2-2*(-1) = ... at infinity the
    // representative z^2 has order -2 and (dz)^{-1} adds +2, so order 0.
    MeromorphicForm e = form(HalfInteger(-1), zf(2));
    CHECK(*form_order_at(e, ExtendedPoint(q(0))) == 2);
    CHECK(*form_order_at(e, ExtendedPoint::infinity()) == 0);
    // a differential dz/z: simple poles at both 0 and infinity
    MeromorphicForm w = form(HalfInteger(1), zf(-1));
    CHECK(*form_order_at(w, ExtendedPoint(q(0))) == -1);
    CHECK(*form_order_at(w, ExtendedPoint::infinity()) == -1);
    // half weight: phi = z^k (dz)^{-1/2} has out-order -k+1
    MeromorphicForm phi = form(half(-1), zf(3));
    CHECK(*form_order_at(phi, ExtendedPoint::infinity()) == -2);
}

TEST_CASE("admissibility allows poles only at marked points") {
    MarkedSphere geom({q(0), q(1)});
    CHECK(is_admissible(form(HalfInteger(0), zf(-3)), geom));
    CHECK(is_admissible(form(HalfInteger(0), RationalFunction(zpow(5))), geom));
    RationalFunction stray(Polynomial::one(), Polynomial::linear_root(q(2)));
    CHECK(!is_admissible(form(HalfInteger(0), stray), geom));
}

TEST_CASE("brackets and products follow the weight calculus") {
    // product adds weights
    MeromorphicForm a = form(HalfInteger(0), zf(2));
    MeromorphicForm b = form(HalfInteger(1), zf(-1));
    CHECK(form_product(a, b).weight == HalfInteger(1));
    CHECK(form_product(a, b).rep == zf(1));
    CHECK_THROWS_AS(lie_derivative(b, a), weight_mismatch);

    // classical vector fields: [e_n, e_m] = (m-n) e_{n+m} with e_n = z^{n+1} d/dz
    auto e = [](long n) { return form(HalfInteger(-1), zf(n + 1)); };
    for (long n = -2; n <= 2; ++n)
        for (long m = -2; m <= 2; ++m) {
            MeromorphicForm lhs = form_bracket(e(n), e(m));
            MeromorphicForm rhs = form(HalfInteger(-1), q(m - n) * zf(n + m + 1));
            CHECK(lhs == rhs);
        }

    // lie derivative on half weight: e_0 . z^k (dz)^{-1/2} = (k - 1/2) z^k
    MeromorphicForm e0 = e(0);
    for (long k = -2; k <= 2; ++k) {
        MeromorphicForm phi = form(half(-1), zf(k));
        MeromorphicForm got = lie_derivative(e0, phi);
        CHECK(got.weight == half(-1));
        CHECK(got.rep == GaussianRational(Rational(2 * k - 1, 2)) * zf(k));
    }
    CHECK_THROWS_AS(lie_derivative(a, b), weight_mismatch);
}

TEST_CASE("form sums keep weights separate") {
    FormSum s(form(HalfInteger(0), zf(1)));
    s.add(form(HalfInteger(-1), zf(2)));
    s.add(form(HalfInteger(0), zf(1)));
    CHECK(s.component(HalfInteger(0)).rep == q(2) * zf(1));
    CHECK(s.component(HalfInteger(-1)).rep == zf(2));
    CHECK(s.component(HalfInteger(5)).is_zero());
    FormSum t = s - s;
    CHECK(t.is_zero());
}

TEST_CASE("poisson defects vanish identically") {
    FormSum a(form(HalfInteger(-1), zf(2) + zf(0)));
    FormSum b(form(HalfInteger(0), zf(-1)));
    FormSum c(form(HalfInteger(1), zf(3)));
    PoissonDefects d = poisson_defects(a, b, c);
    CHECK(d.jacobi.is_zero());
    CHECK(d.leibniz.is_zero());
    CHECK(d.all_zero());
    // mixed sums of several weights
    FormSum m = a + b;
    PoissonDefects d2 = poisson_defects(m, c, a);
    CHECK(d2.all_zero());
}
