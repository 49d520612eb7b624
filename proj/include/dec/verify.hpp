#pragma once

#include "dec/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dec {

struct VerifyOptions {
    int trials = 50;
    std::uint64_t seed = 0;
    int max_degree = -1;  // -1: up to the complex dimension
    bool corrupt_wedge = false;  // test-only hook: perturbs one wedge result
};

enum class PropertyStatus { Pass, Fail, Skip };

struct PropertyResult {
    std::string name;
    PropertyStatus status;
    std::string witness;  // reproducing input, set on failure
};

/// Runs every invariant suite against the given complex with seeded random
/// rational cochains. Deterministic for a fixed seed.
std::vector<PropertyResult> run_verification(const SimplicialComplex& complex,
                                             const VerifyOptions& options);

}  // namespace dec
