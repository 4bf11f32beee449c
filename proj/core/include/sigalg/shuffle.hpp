#pragma once

#include <cstddef>
#include <vector>

#include "sigalg/tensor.hpp"

namespace sigalg {

/// Largest m + n accepted by enumerate_shuffles.
inline constexpr std::size_t kMaxShuffleOrder = 12;

/// All (m,n)-shuffles: permutations sigma of {0..m+n-1} with
/// sigma[0] < ... < sigma[m-1] and sigma[m] < ... < sigma[m+n-1].
/// sigma[a] is the slot taken by letter a when two words are interleaved.
struct ShuffleSet {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Permutation> permutations;
};

/// Deterministic order (first-block positions in lexicographic order), memoized
/// per (m, n). Throws InvalidArgument when m or n is 0 or m + n > kMaxShuffleOrder.
const ShuffleSet& enumerate_shuffles(std::size_t m, std::size_t n);

/// Sum over (m,n)-shuffles of the permuted level m+n of g, as a flat level array.
/// Coincides with g_m ⊗ g_n exactly when g is group-like.
template <Scalar S>
std::vector<S> shuffle_project(const Tensor<S>& g, std::size_t m, std::size_t n);

struct PairResidual {
    std::size_t m;
    std::size_t n;
    double residual;  ///< max |g_m ⊗ g_n - shuffle_project(g, m, n)|
};

struct GroupLikeReport {
    std::vector<PairResidual> pairs;
    double tolerance = 0.0;
    bool pass = true;
};

/// Checks the shuffle product identity for every m, n >= 1 with m + n <= depth.
/// Rational tensors are compared exactly and require tol == 0.
template <Scalar S>
GroupLikeReport group_like_check(const Tensor<S>& g, double tol);

}  // namespace sigalg
