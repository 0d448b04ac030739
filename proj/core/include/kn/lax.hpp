#pragma once

// Matrix-valued Lax operators with Tyurin parameters.  An element is an
// n x n matrix L(z) of rational functions, holomorphic outside the marked
// points and a finite set of extra points gamma_s, where the principal parts
// are pinned to vectors alpha_s:
//
//   gl/sl:  L = alpha beta^t / w + O(1),            beta^t alpha = 0,
//   so:     L = (alpha beta^t - beta alpha^t)/w + O(1),  beta^t alpha = 0,
//           with alpha isotropic (alpha^t alpha = 0),
//   sp:     L = nu alpha alpha^t sigma / w^2
//               + (alpha beta^t + beta alpha^t) sigma / w + O(1),
//           beta^t sigma alpha = 0,
//
// and in every case the constant term must have alpha_s as an eigenvector
// (for sp additionally alpha^t sigma L_1 alpha = 0).  With all alpha_s = 0
// the conditions degenerate to holomorphy at the gamma_s and the space
// becomes the plain current algebra.  These spaces close under the matrix
// commutator (the would-be higher-order pole coefficients cancel against the
// pairing constraints), which certify_lax_closure checks on random elements.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kn/geometry.hpp"
#include "kn/linalg.hpp"
#include "kn/rational_function.hpp"

namespace kn {

enum class MatrixType { gl, sl, so, sp };

std::string matrix_type_name(MatrixType t);
MatrixType matrix_type_from_name(const std::string& name);

struct TyurinPoint {
    GaussianRational gamma;
    std::vector<GaussianRational> alpha;  // all-zero switches the point off
};

struct TyurinData {
    MatrixType type = MatrixType::gl;
    std::size_t n = 0;  // matrix size
    std::vector<TyurinPoint> points;
    QiMatrix sigma;  // sp only; must be skew and nondegenerate

    // Checks sizes, distinctness, disjointness from the in-points and the
    // per-type vector constraints.
    void validate(const MarkedSphere& geom) const;
};

using RfMatrix = Matrix<RationalFunction>;

// Matrix of Laurent coefficients of order k at the point.
QiMatrix matrix_coefficient(const RfMatrix& L, const GaussianRational& gamma, long k);

struct LaxDiagnostic {
    int point;  // 1-based Tyurin point, 0 for global conditions
    std::string constraint;
    std::string message;
};

struct LaxReport {
    bool ok = true;
    std::vector<LaxDiagnostic> issues;
    // Extracted eigenvalues kappa_s where defined (active points only).
    std::vector<std::optional<GaussianRational>> kappas;
};

LaxReport is_lax_element(const RfMatrix& L, const TyurinData& data, const MarkedSphere& geom);

// Basis of the coefficient matrix algebra (gl/sl/so fixed conventions, sp
// relative to data.sigma).
std::vector<QiMatrix> type_matrix_basis(const TyurinData& data);

struct LaxParams {
    std::vector<std::vector<GaussianRational>> beta;        // one vector per point
    std::vector<std::optional<GaussianRational>> kappa;     // pin or leave free
    std::vector<GaussianRational> nu;                       // sp only (else ignored)
    std::vector<QiMatrix> tail;                             // fixed z^k coefficients in g
};

// Builds the element with the prescribed singular parts and a polynomial
// tail solved for exactly; the result always passes is_lax_element.
RfMatrix make_lax_element(const TyurinData& data, const LaxParams& params,
                          const MarkedSphere& geom);

RfMatrix lax_bracket(const RfMatrix& a, const RfMatrix& b);

// Deterministic small random data for closure sweeps.
TyurinData random_tyurin_data(MatrixType type, std::size_t n, int num_points,
                              const MarkedSphere& geom, std::mt19937_64& rng);
LaxParams random_lax_params(const TyurinData& data, std::mt19937_64& rng);

struct LaxClosureReport {
    bool ok = true;
    int pairs_checked = 0;
    std::string witness;  // description of the first failure
};

// Brackets of random pairs stay in the space; for gl the matrix product is
// checked as well.
LaxClosureReport certify_lax_closure(const TyurinData& data, const MarkedSphere& geom,
                                     std::uint64_t seed, int pairs);

}  // namespace kn
