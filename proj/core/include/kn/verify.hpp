#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kn/serialize.hpp"

namespace kn {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyOptions {
    long window = 2;          // degree half-width for the exhaustive sweeps
    int random_triples = 60;  // randomized Poisson / current sweeps
    std::uint64_t seed = 12345;
    unsigned jobs = 1;
};

// Runs the invariant battery against one geometry: duality and order
// prescriptions of the graded basis, almost-graded structure tables with
// their leading terms, Poisson and super Jacobi identities, the cocycle
// conditions and L-invariance, Clifford relations of the wedge/contraction
// operators, a certified central extension and the current algebra.  Every
// check is exact; a thrown exception fails the check that raised it.
std::vector<CheckResult> run_verification(const GeometryConfig& cfg, const VerifyOptions& opt);

Json verification_json(const std::vector<CheckResult>& results);

}  // namespace kn
