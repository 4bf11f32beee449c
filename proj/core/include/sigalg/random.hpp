#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sigalg/path.hpp"
#include "sigalg/tensor.hpp"

namespace sigalg {

/// Seed used whenever the caller does not pick one.
inline constexpr std::uint64_t kDefaultSeed = 20190207;

/// Seeded generator with platform-independent derived draws
/// (std distributions are implementation-defined, so they are avoided).
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    /// Uniform in [0, 1).
    double unit();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// k / denominator with k uniform in [-bound, bound].
    Rational rational(std::int64_t bound, std::int64_t denominator);

    /// Uniform random permutation of {0..k-1}.
    Permutation permutation(std::size_t k);

private:
    std::mt19937_64 engine_;
};

/// Path starting at the origin with `segments` increments whose coordinates are
/// k / denominator, k uniform in [-bound, bound]. Zero increments are redrawn.
Path<Rational> random_rational_path(Rng& rng, std::size_t dimension, std::size_t segments,
                                    std::int64_t bound = 4, std::int64_t denominator = 16);

/// Tensor with every coefficient drawn like Rng::rational; constant term set to `constant`.
Tensor<Rational> random_rational_tensor(Rng& rng, std::size_t dimension, std::size_t depth, long constant,
                                        std::int64_t bound = 6, std::int64_t denominator = 4);

/// Coefficients uniform in [-1, 1); constant term set to `constant`.
Tensor<double> random_real_tensor(Rng& rng, std::size_t dimension, std::size_t depth, double constant);
Tensor<Complex> random_complex_tensor(Rng& rng, std::size_t dimension, std::size_t depth, Complex constant);

}  // namespace sigalg
