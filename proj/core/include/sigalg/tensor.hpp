#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigalg/norm.hpp"
#include "sigalg/scalar.hpp"

namespace sigalg {

/// Permutation of {0..k-1} in one-line notation: sigma[j] is the image of j.
using Permutation = std::vector<std::size_t>;

/// Number of words of length k over d letters.
std::size_t level_size(std::size_t dimension, std::size_t degree);

/// (d^(N+1) - 1) / (d - 1), or N + 1 when d == 1.
std::size_t total_size(std::size_t dimension, std::size_t depth);

/// Lexicographic offset of a word with 0-based letters.
std::size_t word_index(std::span<const std::size_t> word, std::size_t dimension);

/// Element of the truncated tensor algebra T^(N)(K^d).
///
/// Levels 0..N are stored back to back; level k holds d^k coefficients in
/// lexicographic word order. Values are plain data: copy freely, share across
/// threads, no hidden state.
template <Scalar S>
class Tensor {
public:
    using value_type = S;

    /// Zero tensor.
    Tensor(std::size_t dimension, std::size_t depth);

    /// (1, 0, 0, ...).
    static Tensor unit(std::size_t dimension, std::size_t depth);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t depth() const noexcept { return depth_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    std::span<const S> level(std::size_t degree) const;
    std::span<S> level(std::size_t degree);

    std::span<const S> coefficients() const noexcept { return coeffs_; }
    std::span<S> coefficients() noexcept { return coeffs_; }

    const S& constant() const noexcept { return coeffs_.front(); }

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    std::size_t dimension_;
    std::size_t depth_;
    std::vector<std::size_t> offsets_;
    std::vector<S> coeffs_;
};

template <Scalar S>
bool same_shape(const Tensor<S>& a, const Tensor<S>& b) noexcept {
    return a.dimension() == b.dimension() && a.depth() == b.depth();
}

/// Throws ShapeMismatch unless a and b share dimension and depth.
template <Scalar S>
void require_same_shape(const Tensor<S>& a, const Tensor<S>& b);

template <Scalar S>
Tensor<S> operator+(const Tensor<S>& a, const Tensor<S>& b);

template <Scalar S>
Tensor<S> operator-(const Tensor<S>& a, const Tensor<S>& b);

template <Scalar S>
Tensor<S> scale(const Tensor<S>& x, const S& factor);

/// Truncated tensor product: level k is sum over p + q = k of a_p ⊗ b_q.
template <Scalar S>
Tensor<S> multiply(const Tensor<S>& a, const Tensor<S>& b);

/// Homogeneous product of two flat level arrays: (a ⊗ b)[i * |b| + j] = a[i] * b[j].
template <Scalar S>
std::vector<S> outer(std::span<const S> a, std::span<const S> b);

/// Sum of x^k / k! for k = 0..N. Requires a zero constant term.
template <Scalar S>
Tensor<S> tensor_exp(const Tensor<S>& x);

/// Sum of (-1)^(k+1) (g - 1)^k / k for k = 1..N. Requires constant term 1.
template <Scalar S>
Tensor<S> tensor_log(const Tensor<S>& g);

/// Tensor with only level 1 set to v.
template <Scalar S>
Tensor<S> from_vector(std::span<const S> v, std::size_t depth);

/// exp(v) for a level-1 element: level k is v^{⊗k} / k!.
template <Scalar S>
Tensor<S> exp_of_vector(std::span<const S> v, std::size_t depth);

/// r ⊗ exp(v) for a level-1 v, by a per-level Horner scheme.
template <Scalar S>
Tensor<S> multiply_by_exp(const Tensor<S>& r, std::span<const S> v);

/// Permutation operator on level `degree`: the output coefficient at word w is
/// the input coefficient at word w∘sigma, i.e. at (w[sigma[0]], ..., w[sigma[k-1]]).
/// Other levels are copied.
template <Scalar S>
Tensor<S> permute(const Tensor<S>& x, std::size_t degree, std::span<const std::size_t> sigma);

/// Same action on a bare level-k array over d letters.
template <Scalar S>
std::vector<S> permute_level(std::span<const S> level, std::size_t dimension,
                             std::span<const std::size_t> sigma);

/// Throws InvalidArgument unless sigma is a bijection of {0..k-1}.
void require_permutation(std::span<const std::size_t> sigma, std::size_t k);

Permutation inverse(std::span<const std::size_t> sigma);

/// l1: sum of magnitudes. l2: Euclidean norm. Complex entries use the modulus.
template <Scalar S>
double level_norm(std::span<const S> level, NormKind kind);

template <Scalar S>
double level_norm(const Tensor<S>& x, std::size_t degree, NormKind kind);

/// Exact l1 norm of a rational level.
Rational level_l1_exact(std::span<const Rational> level);

/// Exact squared l2 norm of a rational level.
Rational level_l2_squared_exact(std::span<const Rational> level);

/// Largest coefficient-wise |a - b|; exactly 0 for equal rational tensors.
template <Scalar S>
double max_abs_difference(std::span<const S> a, std::span<const S> b);

template <Scalar S>
double max_abs_difference(const Tensor<S>& a, const Tensor<S>& b);

/// delta_lambda: level k scaled by lambda^k, in the tensor's own field.
template <Scalar S>
Tensor<S> dilate(const Tensor<S>& x, const S& lambda);

/// Real tensors accept only real lambda; complexify first otherwise.
template <RealScalar S>
Tensor<S> dilate(const Tensor<S>& x, const Complex& lambda);

Tensor<double> to_f64(const Tensor<Rational>& x);

}  // namespace sigalg
