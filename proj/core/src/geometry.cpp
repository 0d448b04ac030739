#include "kn/geometry.hpp"

#include <sstream>

namespace kn {

MarkedSphere::MarkedSphere(std::vector<GaussianRational> in_points)
    : points_(std::move(in_points)) {
    if (points_.empty()) throw domain_error("at least one in-point is required");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw domain_error("in-points must be distinct, duplicate " + points_[i].str());
}

const GaussianRational& MarkedSphere::point(int i) const {
    if (i < 1 || i > K()) throw domain_error("in-point index out of range: " + std::to_string(i));
    return points_[static_cast<std::size_t>(i - 1)];
}

bool MarkedSphere::is_in_point(const GaussianRational& z) const {
    for (const auto& p : points_)
        if (p == z) return true;
    return false;
}

ConnectionReport validate_connection(ConnectionKind kind, const RationalFunction& rep,
                                     const MarkedSphere& geom) {
    ConnectionReport report;
    for (int i = 1; i <= geom.K(); ++i) {
        auto ord = order_at(rep, ExtendedPoint(geom.point(i)));
        if (ord.has_value() && *ord < 0) {
            report.ok = false;
            report.violations.push_back(
                {i, *ord, "pole of order " + std::to_string(-*ord) + " at in-point " + geom.point(i).str()});
        }
    }
    if (kind == ConnectionKind::affine) {
        auto ord = order_at(rep, ExtendedPoint::infinity());
        if (ord.has_value() && *ord < -1) {
            report.ok = false;
            report.violations.push_back(
                {0, *ord, "pole of order " + std::to_string(-*ord) + " at the out-point, at most 1 allowed"});
        }
    }
    return report;
}

CycleClass CycleClass::single(const MarkedSphere& geom, int i) {
    if (i < 1 || i > geom.K()) throw domain_error("cycle index out of range: " + std::to_string(i));
    std::vector<long> m(static_cast<std::size_t>(geom.K()), 0);
    m[static_cast<std::size_t>(i - 1)] = 1;
    return CycleClass(std::move(m));
}

long CycleClass::multiplicity(int i) const {
    if (i < 1 || i > size()) throw domain_error("cycle multiplicity index out of range");
    return mult_[static_cast<std::size_t>(i - 1)];
}

std::string CycleClass::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < mult_.size(); ++k) {
        if (k) os << ",";
        os << mult_[k];
    }
    return os.str();
}

RationalFunction transform_projective(const RationalFunction& R, const RationalFunction& h) {
    RationalFunction h1 = h.derivative();
    return compose(R, h) * h1 * h1 + schwarzian_derivative(h);
}

RationalFunction transform_affine(const RationalFunction& T, const RationalFunction& h) {
    RationalFunction h1 = h.derivative();
    if (h1.is_zero()) throw domain_error("affine transport along a constant map");
    return compose(T, h) * h1 + h1.derivative() / h1;
}

}  // namespace kn
