#pragma once

// The geometric configuration: K distinct marked in-points on the affine
// line plus the out-point at infinity, together with reference connections
// used by the vector-field and mixing cocycles, and integer cycle classes
// encoded by residue multiplicities at the in-points.

#include <string>
#include <vector>

#include "kn/rational_function.hpp"

namespace kn {

class MarkedSphere {
  public:
    explicit MarkedSphere(std::vector<GaussianRational> in_points);

    int K() const { return static_cast<int>(points_.size()); }
    // 1-based, matching the index convention used everywhere in the API.
    const GaussianRational& point(int i) const;
    const std::vector<GaussianRational>& in_points() const { return points_; }
    ExtendedPoint out_point() const { return ExtendedPoint::infinity(); }

    bool is_in_point(const GaussianRational& z) const;

    friend bool operator==(const MarkedSphere& a, const MarkedSphere& b) {
        return a.points_ == b.points_;
    }

  private:
    std::vector<GaussianRational> points_;
};

// Reference data entering the third-kind cocycle integrands.  A projective
// connection transforms with the square of the Jacobian plus a Schwarzian
// term; an affine connection transforms with the Jacobian plus a logarithmic
// term.  On the sphere a global holomorphic representative exists (R = 0,
// T = 0) and the coordinate change z -> 1/z has vanishing Schwarzian, so a
// single chart representative is a faithful description.
struct ProjectiveConnection {
    RationalFunction rep;
    static ProjectiveConnection zero() { return {RationalFunction::zero()}; }
};

struct AffineConnection {
    RationalFunction rep;
    static AffineConnection zero() { return {RationalFunction::zero()}; }
};

enum class ConnectionKind { projective, affine };

struct ConnectionDiagnostic {
    int point;  // 1-based in-point index, 0 for the out-point
    long order;
    std::string message;
};

struct ConnectionReport {
    bool ok = true;
    std::vector<ConnectionDiagnostic> violations;
};

// Checks that the representative is holomorphic at every in-point; affine
// connections may additionally have a pole of order at most one at the
// out-point.  Violations are reported per point with the offending order.
ConnectionReport validate_connection(ConnectionKind kind, const RationalFunction& rep,
                                     const MarkedSphere& geom);

// Integer combination of the small circles around the in-points.  The
// separating cycle takes every multiplicity equal to one; integration over a
// class is the multiplicity-weighted sum of residues.
class CycleClass {
  public:
    explicit CycleClass(std::vector<long> multiplicities)
        : mult_(std::move(multiplicities)) {}

    static CycleClass separating(const MarkedSphere& geom) {
        return CycleClass(std::vector<long>(static_cast<std::size_t>(geom.K()), 1));
    }
    static CycleClass single(const MarkedSphere& geom, int i);

    int size() const { return static_cast<int>(mult_.size()); }
    long multiplicity(int i) const;  // 1-based
    const std::vector<long>& multiplicities() const { return mult_; }

    std::string str() const;

  private:
    std::vector<long> mult_;
};

// Transported connection representatives under a coordinate change z = h(w):
// used in tests to confirm the transformation laws close (the difference of
// two projective connections transforms as a quadratic differential).
RationalFunction transform_projective(const RationalFunction& R, const RationalFunction& h);
RationalFunction transform_affine(const RationalFunction& T, const RationalFunction& h);

}  // namespace kn
