#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigalg/tensor.hpp"

namespace sigalg {

/// Degrees 1..depth at which a tensor series is nonzero.
struct DegreePattern {
    std::size_t depth = 0;
    std::vector<std::uint64_t> nonzero;  ///< sorted ascending
    bool exact = false;                  ///< certified by rational arithmetic

    bool trivial() const noexcept { return nonzero.empty(); }
};

/// Degree n is nonzero iff some coefficient of level n exceeds tol in magnitude.
/// Rational tensors require tol == 0.
template <Scalar S>
DegreePattern extract_pattern(const Tensor<S>& g, double tol);

/// gcd of the elements when it is at least 2, so every element lies in (d);
/// nullopt when the gcd is 1. Throws InvalidArgument for an empty set or a zero element.
std::optional<std::uint64_t> min_modulus(std::span<const std::uint64_t> elements);

/// Largest integer that is not a nonnegative combination of the generators.
/// Requires gcd 1, every generator >= 2 and min * max <= 10^6.
std::uint64_t frobenius_number(std::span<const std::uint64_t> generators);

struct AdditivityResult {
    bool closed = true;
    /// Smallest missing sum i + j (i <= j) when not closed.
    struct Counterexample {
        std::uint64_t i;
        std::uint64_t j;
        std::uint64_t sum;
    };
    std::optional<Counterexample> counterexample;
};

/// True iff i + j belongs to the set for every i, j in it with i + j <= bound.
AdditivityResult verify_additive(std::span<const std::uint64_t> elements, std::uint64_t bound);

/// Elements of the additive semigroup generated by `generators`, in [1, bound].
std::vector<std::uint64_t> semigroup_elements(std::span<const std::uint64_t> generators, std::uint64_t bound);

}  // namespace sigalg
