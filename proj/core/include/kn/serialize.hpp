#pragma once

#include <string>

#include <json.hpp>

#include "kn/basis.hpp"
#include "kn/cocycles.hpp"
#include "kn/forms.hpp"
#include "kn/geometry.hpp"
#include "kn/lax.hpp"
#include "kn/rational.hpp"
#include "kn/rational_function.hpp"

namespace kn {

// Ordered maps keep every emission byte-stable for a fixed input.
using Json = nlohmann::ordered_json;

// Scalars travel as exact strings ("3/4", "1/2+2*I"); integers are accepted
// on input as a convenience.
Json scalar_json(const GaussianRational& x);
GaussianRational scalar_from_json(const Json& j);

// Half-integers: plain JSON number when integral, "t/2" string otherwise.
Json half_json(const HalfInteger& h);
HalfInteger half_from_json(const Json& j);

// Polynomials as exponent -> scalar maps, exponents ascending.
Json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json rational_function_json(const RationalFunction& f);  // {"num":…,"den":…}
RationalFunction rational_function_from_json(const Json& j);

Json form_json(const MeromorphicForm& f);  // {"weight":…,"num":…,"den":…}
MeromorphicForm form_from_json(const Json& j);

// A geometry plus the two connections that make cocycle integrands
// well-defined.  File format:
//   {"in_points": ["0","1","-1"],
//    "projective_connection": "0" | {"num":…,"den":…},
//    "affine_connection": "0" | {"num":…,"den":…}}
// Both connections default to zero, which is valid on the sphere.
struct GeometryConfig {
    MarkedSphere geom;
    ProjectiveConnection proj;
    AffineConnection aff;
};

GeometryConfig classical_geometry();  // single in-point at the origin
GeometryConfig geometry_config_from_json(const Json& j);
Json geometry_config_json(const GeometryConfig& cfg);
GeometryConfig load_geometry_file(const std::string& path);

Json structure_table_json(const StructureConstantTable& table);
std::string structure_table_csv(const StructureConstantTable& table);

Json locality_json(const LocalityWindow& w);

Json tyurin_json(const TyurinData& data);
TyurinData tyurin_from_json(const Json& j);
Json rf_matrix_json(const RfMatrix& m);  // array of rows of {"num","den"}
RfMatrix rf_matrix_from_json(const Json& j);
Json lax_report_json(const LaxReport& r);

// Strict parsing wrappers that convert library exceptions to parse_error.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

// Canonical dump: two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace kn
