#include <doctest.h>

#include "kn/lax.hpp"

using namespace kn;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(Rational(n, d)); }
RationalFunction rf(long n) { return RationalFunction(q(n)); }
RationalFunction pole_at(long c, long e = -1) {
    return RationalFunction::linear_power(q(c), e);
}

const MarkedSphere& classical() {
    static MarkedSphere geom({q(0)});
    return geom;
}
}  // namespace

TEST_CASE("type names round trip") {
    for (MatrixType t : {MatrixType::gl, MatrixType::sl, MatrixType::so, MatrixType::sp})
        CHECK(matrix_type_from_name(matrix_type_name(t)) == t);
    CHECK_THROWS_AS(matrix_type_from_name("su"), parse_error);
}

TEST_CASE("tyurin data validation") {
    TyurinData ok{MatrixType::gl, 2, {{q(1), {q(1), q(0)}}}, {}};
    ok.validate(classical());

    TyurinData at_marked = ok;
    at_marked.points[0].gamma = q(0);
    CHECK_THROWS_AS(at_marked.validate(classical()), domain_error);

    TyurinData dup{MatrixType::gl, 2, {{q(1), {q(1), q(0)}}, {q(1), {q(0), q(1)}}}, {}};
    CHECK_THROWS_AS(dup.validate(classical()), domain_error);

    TyurinData bad_size{MatrixType::gl, 2, {{q(1), {q(1)}}}, {}};
    CHECK_THROWS_AS(bad_size.validate(classical()), domain_error);

    // orthogonal case needs isotropic alpha
    TyurinData aniso{MatrixType::so, 3, {{q(1), {q(1), q(0), q(0)}}}, {}};
    CHECK_THROWS_AS(aniso.validate(classical()), domain_error);
    TyurinData iso{MatrixType::so, 3, {{q(1), {q(1), GaussianRational::i(), q(0)}}}, {}};
    iso.validate(classical());

    QiMatrix sigma(2, 2);
    sigma(0, 1) = q(1), sigma(1, 0) = q(-1);
    TyurinData sp_ok{MatrixType::sp, 2, {{q(1), {q(1), q(0)}}}, sigma};
    sp_ok.validate(classical());
    TyurinData sp_odd{MatrixType::sp, 3, {{q(1), {q(1), q(0), q(0)}}}, QiMatrix(3, 3)};
    CHECK_THROWS_AS(sp_odd.validate(classical()), domain_error);
}

TEST_CASE("membership for a hand built general linear element") {
    TyurinData data{MatrixType::gl, 2, {{q(1), {q(1), q(0)}}}, {}};

    RfMatrix L(2, 2);
    L(0, 0) = rf(5);
    L(0, 1) = q(2) * pole_at(1);
    L(1, 1) = rf(5);
    LaxReport rep = is_lax_element(L, data, classical());
    CHECK(rep.ok);
    REQUIRE(rep.kappas.size() == 1);
    REQUIRE(rep.kappas[0].has_value());
    CHECK(*rep.kappas[0] == q(5));
    CHECK(matrix_coefficient(L, q(1), -1)(0, 1) == q(2));
    CHECK(matrix_coefficient(L, q(1), 0)(0, 0) == q(5));

    // breaking the rank-one structure of the residue is detected
    RfMatrix bad = L;
    bad(1, 0) = pole_at(1);
    CHECK(!is_lax_element(bad, data, classical()).ok);

    // a pole away from the allowed set is detected
    RfMatrix stray = L;
    stray(0, 0) = pole_at(2);
    CHECK(!is_lax_element(stray, data, classical()).ok);

    // second order poles are out of range for gl
    RfMatrix deep = L;
    deep(0, 1) = q(2) * pole_at(1, -2);
    CHECK(!is_lax_element(deep, data, classical()).ok);

    RfMatrix wrong_shape(3, 3);
    CHECK_THROWS_AS(is_lax_element(wrong_shape, data, classical()), domain_error);

    // the traceless version additionally needs vanishing total trace
    TyurinData sdata = data;
    sdata.type = MatrixType::sl;
    CHECK(!is_lax_element(L, sdata, classical()).ok);
    RfMatrix S = L;
    S(1, 1) = rf(-5);
    LaxReport srep = is_lax_element(S, sdata, classical());
    CHECK(srep.ok);
    CHECK(*srep.kappas[0] == q(5));
}

TEST_CASE("inactive points require holomorphy") {
    TyurinData data{MatrixType::gl, 2, {{q(1), {q(0), q(0)}}}, {}};
    RfMatrix L(2, 2);
    L(0, 0) = rf(3);
    CHECK(is_lax_element(L, data, classical()).ok);
    CHECK(!is_lax_element(L, data, classical()).kappas[0].has_value());
    L(0, 1) = pole_at(1);
    CHECK(!is_lax_element(L, data, classical()).ok);
}

TEST_CASE("constructed elements pass membership with the requested data") {
    TyurinData data{MatrixType::gl, 2,
                    {{q(1), {q(1), q(0)}}, {q(-1), {q(1), q(1)}}}, {}};
    LaxParams params;
    params.beta = {{q(0), q(2)}, {q(1), q(-1)}};
    params.kappa = {q(5), q(-2)};
    params.nu = {};
    QiMatrix t0(2, 2);
    t0(0, 0) = q(1);
    params.tail = {t0};

    RfMatrix L = make_lax_element(data, params, classical());
    LaxReport rep = is_lax_element(L, data, classical());
    CHECK(rep.ok);
    CHECK(*rep.kappas[0] == q(5));
    CHECK(*rep.kappas[1] == q(-2));
    QiMatrix res1 = matrix_coefficient(L, q(1), -1);
    CHECK(res1(0, 0) == q(0));
    CHECK(res1(0, 1) == q(2));
    CHECK(res1(1, 0) == q(0));
    CHECK(res1(1, 1) == q(0));

    // mismatched pairing data is rejected up front
    LaxParams badpair = params;
    badpair.beta[0] = {q(1), q(0)};
    CHECK_THROWS_AS(make_lax_element(data, badpair, classical()), domain_error);

    // free eigenvalues get solved and reported
    LaxParams free_kappa = params;
    free_kappa.kappa = {std::nullopt, std::nullopt};
    RfMatrix F = make_lax_element(data, free_kappa, classical());
    LaxReport frep = is_lax_element(F, data, classical());
    CHECK(frep.ok);
    CHECK(frep.kappas[0].has_value());
    CHECK(frep.kappas[1].has_value());
}

TEST_CASE("bracket closure on random elements") {
    MarkedSphere geom({q(0), q(2)});
    struct Case {
        MatrixType type;
        std::size_t n;
    };
    for (Case c : {Case{MatrixType::gl, 2}, Case{MatrixType::sl, 2}, Case{MatrixType::so, 3},
                   Case{MatrixType::sp, 2}}) {
        std::mt19937_64 rng(41);
        TyurinData data = random_tyurin_data(c.type, c.n, 2, geom, rng);
        data.validate(geom);
        LaxClosureReport rep = certify_lax_closure(data, geom, 99, 4);
        CHECK_MESSAGE(rep.ok, matrix_type_name(c.type), ": ", rep.witness);
        CHECK(rep.pairs_checked == 4);
    }
}

TEST_CASE("zero alphas reduce to the current algebra") {
    MarkedSphere geom({q(0)});
    TyurinData data{MatrixType::gl, 2, {{q(1), {q(0), q(0)}}}, {}};
    QiMatrix x(2, 2), y(2, 2);
    x(0, 1) = q(1);
    y(1, 0) = q(1);
    RationalFunction f = RationalFunction::z().pow(2);
    RationalFunction g = RationalFunction::z().pow(-1);

    auto times = [](const QiMatrix& m, const RationalFunction& h) {
        RfMatrix out(m.rows(), m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * RationalFunction(h);
        return out;
    };
    RfMatrix a = times(x, f);
    RfMatrix b = times(y, g);
    CHECK(is_lax_element(a, data, geom).ok);
    CHECK(is_lax_element(b, data, geom).ok);

    RfMatrix ab = lax_bracket(a, b);
    CHECK(is_lax_element(ab, data, geom).ok);
    QiMatrix comm = x * y - y * x;
    RfMatrix want = times(comm, f * g);
    CHECK(ab == want);
    CHECK((lax_bracket(b, a) + ab).is_zero());
}

TEST_CASE("matrix bases of the coefficient algebras") {
    CHECK(type_matrix_basis(TyurinData{MatrixType::gl, 2, {}, {}}).size() == 4);
    CHECK(type_matrix_basis(TyurinData{MatrixType::sl, 2, {}, {}}).size() == 3);
    CHECK(type_matrix_basis(TyurinData{MatrixType::so, 3, {}, {}}).size() == 3);
    QiMatrix sigma(2, 2);
    sigma(0, 1) = q(1), sigma(1, 0) = q(-1);
    auto spb = type_matrix_basis(TyurinData{MatrixType::sp, 2, {}, sigma});
    CHECK(spb.size() == 3);
    for (const auto& m : spb) CHECK((m.transposed() * sigma + sigma * m).is_zero());
}
