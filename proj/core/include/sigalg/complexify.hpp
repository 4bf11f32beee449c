#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sigalg/norm.hpp"
#include "sigalg/semigroup.hpp"
#include "sigalg/tensor.hpp"

namespace sigalg {

/// Levelwise embedding V^{⊗k} -> (V_C)^{⊗k}: same coordinates, zero imaginary parts.
Tensor<Complex> complexify(const Tensor<double>& x);
Tensor<Complex> complexify(const Tensor<Rational>& x);

/// Smallest grid accepted by taylor_norm.
inline constexpr std::size_t kMinTaylorGrid = 4;

/// Taylor complexification norm sup_t ||x cos t - y sin t|| of z = x + iy.
///
/// l2 is evaluated in closed form and ignores `grid`. For l1 the profile is a
/// sinusoid between sign changes; every piece is maximized exactly and the
/// `grid` uniform samples over [0, 2pi) are added as candidates.
double taylor_norm(std::span<const Complex> z, NormKind kind, std::size_t grid = 1024);

/// e^{2 pi i / d}, with the exactly representable cases d = 1, 2, 4 snapped.
Complex root_of_unity(std::uint64_t d);

struct DilationResidual {
    std::size_t degree = 0;
    double residual = 0.0;  ///< ||delta_lambda(g)_k - g_k|| = |lambda^k - 1| ||g_k||
};

struct DilationReport {
    std::uint64_t modulus = 0;
    NormKind kind = NormKind::L1Projective;
    double tolerance = 0.0;
    std::vector<DilationResidual> residuals;
    bool pass = true;            ///< every residual <= tolerance
    DegreePattern pattern;
    bool pattern_verdict = true; ///< every nonzero degree is a multiple of the modulus
    bool agree = true;
};

/// Decides delta_lambda(j(g)) == j(g) for lambda = e^{2 pi i / d} twice: by
/// complex residuals and by the divisibility of the nonzero degrees. The
/// pattern is exact for rational g and thresholded at tol otherwise.
template <Scalar S>
DilationReport dilation_invariance_check(const Tensor<S>& g, std::uint64_t modulus,
                                         NormKind kind = NormKind::L1Projective, double tol = 1e-12);

}  // namespace sigalg
