#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigalg/norm.hpp"
#include "sigalg/path.hpp"
#include "sigalg/tensor.hpp"

namespace sigalg {

/// Relative slack allowed before b_{i+j} < b_i b_j counts as a violation.
inline constexpr double kSupermultiplicativeSlack = 1e-9;

/// Relative slack on the factorial decay bound sup_n a_n <= L.
inline constexpr double kDecaySlack = 1e-12;

struct DegreeTerm {
    std::size_t degree = 0;
    double b = 0.0;                     ///< n! ||g_n||
    std::optional<double> a;            ///< b^(1/n); absent where g_n == 0
    std::optional<double> running_sup;  ///< max of a_m over nonzero m <= n
    /// Rational input only: exact b for l1, exact b^2 for l2 (the root is irrational).
    std::optional<std::string> b_exact;
};

struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    double b_sum = 0.0;    ///< b_{i+j}
    double product = 0.0;  ///< b_i b_j
};

/// Finite-depth trace of the normalized norms ||n! g_n||^(1/n).
struct AsymptoticsReport {
    std::size_t depth = 0;
    NormKind kind = NormKind::L1Projective;
    bool exact = false;
    std::vector<DegreeTerm> terms;              ///< degrees 1..depth
    std::vector<std::uint64_t> nonzero_degrees;
    std::optional<double> sup;                  ///< S_N; absent when every level vanishes
    std::vector<Violation> violations;          ///< i <= j, i + j <= depth
    std::optional<double> length;
    std::optional<double> ratio;                ///< S_N / L
    std::optional<bool> within_length;          ///< S_N <= L (1 + kDecaySlack)
};

/// Requires constant term 1.
template <Scalar S>
AsymptoticsReport analyze(const Tensor<S>& g, NormKind kind, std::optional<double> length = std::nullopt);

struct LengthEstimate {
    std::optional<double> sup;
    double length = 0.0;
    std::optional<double> ratio;
    bool trivial = false;  ///< signature is the unit to this depth
    bool within_bound = true;
    /// Rational path under l1 only: b_n == L^n exactly for every n <= N.
    std::optional<bool> saturated;
    AsymptoticsReport report;
};

template <RealScalar S>
LengthEstimate length_estimate(const Path<S>& path, NormKind kind, std::size_t depth);

/// Binary64 n-th root of a positive rational. When some double r near the
/// naive root satisfies r^n == value exactly, that r is returned.
double exact_aware_root(const Rational& value, unsigned n);

}  // namespace sigalg
