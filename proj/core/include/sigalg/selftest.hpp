#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigalg/random.hpp"

namespace sigalg {

struct SelftestConfig {
    std::uint64_t seed = kDefaultSeed;
    /// Replaces the inspection depth of the depth-parametric suites
    /// (shuffle identity, decay, supermultiplicativity, additivity, length).
    std::optional<std::size_t> depth;
    /// Caps the dimension of random paths.
    std::optional<std::size_t> dimension;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full invariant suite. Deterministic for a given config.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

}  // namespace sigalg
