#include "sigalg/tensor.hpp"

#include <cmath>
#include <string>

#include "sigalg/errors.hpp"

namespace sigalg {

namespace {

constexpr std::size_t kMaxCoefficients = std::size_t{1} << 28;

// acc += a * b without materializing a gmpxx temporary per call.
inline void add_product(Rational& acc, const Rational& a, const Rational& b) {
    thread_local Rational scratch;
    mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
}

template <class S>
inline void add_product(S& acc, const S& a, const S& b) {
    acc += a * b;
}

template <Scalar S>
S reciprocal(std::size_t k) {
    if constexpr (std::is_same_v<S, Rational>) return Rational(1, static_cast<unsigned long>(k));
    else return S(1.0 / static_cast<double>(k));
}

}  // namespace

std::string_view to_string(NormKind kind) {
    switch (kind) {
        case NormKind::L1Projective: return "l1proj";
        case NormKind::L2HilbertSchmidt: return "l2hs";
    }
    return "unknown";
}

NormKind parse_norm_kind(std::string_view text) {
    if (text == "l1proj") return NormKind::L1Projective;
    if (text == "l2hs") return NormKind::L2HilbertSchmidt;
    throw InvalidArgument("unknown norm '" + std::string(text) + "' (expected l1proj or l2hs)");
}

std::size_t level_size(std::size_t dimension, std::size_t degree) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (dimension != 0 && n > kMaxCoefficients / dimension)
            throw InvalidArgument("tensor level too large");
        n *= dimension;
    }
    return n;
}

std::size_t total_size(std::size_t dimension, std::size_t depth) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= depth; ++k) {
        total += level_size(dimension, k);
        if (total > kMaxCoefficients) throw InvalidArgument("tensor too large");
    }
    return total;
}

std::size_t word_index(std::span<const std::size_t> word, std::size_t dimension) {
    std::size_t index = 0;
    for (std::size_t letter : word) {
        if (letter >= dimension) throw InvalidArgument("letter out of range");
        index = index * dimension + letter;
    }
    return index;
}

template <Scalar S>
Tensor<S>::Tensor(std::size_t dimension, std::size_t depth) : dimension_(dimension), depth_(depth) {
    if (dimension == 0) throw InvalidArgument("tensor dimension must be positive");
    if (depth == 0) throw InvalidArgument("tensor depth must be positive");
    offsets_.reserve(depth + 2);
    std::size_t offset = 0;
    for (std::size_t k = 0; k <= depth; ++k) {
        offsets_.push_back(offset);
        offset += level_size(dimension, k);
        if (offset > kMaxCoefficients) throw InvalidArgument("tensor too large");
    }
    offsets_.push_back(offset);
    coeffs_.assign(offset, S{});
}

template <Scalar S>
Tensor<S> Tensor<S>::unit(std::size_t dimension, std::size_t depth) {
    Tensor t(dimension, depth);
    t.coeffs_[0] = from_integer<S>(1);
    return t;
}

template <Scalar S>
std::span<const S> Tensor<S>::level(std::size_t degree) const {
    if (degree > depth_) throw InvalidArgument("degree " + std::to_string(degree) + " exceeds depth");
    return std::span<const S>(coeffs_).subspan(offsets_[degree], offsets_[degree + 1] - offsets_[degree]);
}

template <Scalar S>
std::span<S> Tensor<S>::level(std::size_t degree) {
    if (degree > depth_) throw InvalidArgument("degree " + std::to_string(degree) + " exceeds depth");
    return std::span<S>(coeffs_).subspan(offsets_[degree], offsets_[degree + 1] - offsets_[degree]);
}

template <Scalar S>
void require_same_shape(const Tensor<S>& a, const Tensor<S>& b) {
    if (!same_shape(a, b))
        throw ShapeMismatch("shape mismatch: (d=" + std::to_string(a.dimension()) + ", N=" +
                            std::to_string(a.depth()) + ") vs (d=" + std::to_string(b.dimension()) +
                            ", N=" + std::to_string(b.depth()) + ")");
}

template <Scalar S>
Tensor<S> operator+(const Tensor<S>& a, const Tensor<S>& b) {
    require_same_shape(a, b);
    Tensor<S> out = a;
    auto dst = out.coefficients();
    auto src = b.coefficients();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    return out;
}

template <Scalar S>
Tensor<S> operator-(const Tensor<S>& a, const Tensor<S>& b) {
    require_same_shape(a, b);
    Tensor<S> out = a;
    auto dst = out.coefficients();
    auto src = b.coefficients();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
    return out;
}

template <Scalar S>
Tensor<S> scale(const Tensor<S>& x, const S& factor) {
    Tensor<S> out = x;
    for (auto& c : out.coefficients()) c *= factor;
    return out;
}

template <Scalar S>
Tensor<S> multiply(const Tensor<S>& a, const Tensor<S>& b) {
    require_same_shape(a, b);
    Tensor<S> out(a.dimension(), a.depth());
    for (std::size_t k = 0; k <= a.depth(); ++k) {
        auto dst = out.level(k);
        for (std::size_t p = 0; p <= k; ++p) {
            auto lhs = a.level(p);
            auto rhs = b.level(k - p);
            const std::size_t stride = rhs.size();
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                if (is_zero(lhs[i])) continue;
                S* row = dst.data() + i * stride;
                for (std::size_t j = 0; j < stride; ++j) {
                    if (is_zero(rhs[j])) continue;
                    add_product(row[j], lhs[i], rhs[j]);
                }
            }
        }
    }
    return out;
}

template <Scalar S>
std::vector<S> outer(std::span<const S> a, std::span<const S> b) {
    std::vector<S> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

template <Scalar S>
Tensor<S> tensor_exp(const Tensor<S>& x) {
    if (!is_zero(x.constant())) throw InvalidArgument("exp requires a zero constant term");
    const auto unit = Tensor<S>::unit(x.dimension(), x.depth());
    // Horner: 1 + x(1 + x/2(1 + x/3(...)))
    Tensor<S> acc = unit;
    for (std::size_t k = x.depth(); k >= 1; --k) acc = unit + scale(multiply(x, acc), reciprocal<S>(k));
    return acc;
}

template <Scalar S>
Tensor<S> tensor_log(const Tensor<S>& g) {
    if (g.constant() != from_integer<S>(1)) throw InvalidArgument("log requires constant term 1");
    const auto unit = Tensor<S>::unit(g.dimension(), g.depth());
    const Tensor<S> y = g - unit;
    auto coefficient = [](std::size_t k) {
        S c = reciprocal<S>(k);
        return (k % 2 == 1) ? c : S(-c);
    };
    Tensor<S> acc = scale(unit, coefficient(g.depth()));
    for (std::size_t k = g.depth() - 1; k >= 1; --k) acc = scale(unit, coefficient(k)) + multiply(y, acc);
    return multiply(y, acc);
}

template <Scalar S>
Tensor<S> from_vector(std::span<const S> v, std::size_t depth) {
    Tensor<S> out(v.size(), depth);
    std::copy(v.begin(), v.end(), out.level(1).begin());
    return out;
}

template <Scalar S>
Tensor<S> exp_of_vector(std::span<const S> v, std::size_t depth) {
    auto out = Tensor<S>::unit(v.size(), depth);
    for (std::size_t k = 1; k <= depth; ++k) {
        auto prev = out.level(k - 1);
        auto dst = out.level(k);
        const S inv = reciprocal<S>(k);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            if (is_zero(prev[i])) continue;
            const S head = prev[i] * inv;
            for (std::size_t j = 0; j < v.size(); ++j) dst[i * v.size() + j] = head * v[j];
        }
    }
    return out;
}

template <Scalar S>
Tensor<S> multiply_by_exp(const Tensor<S>& r, std::span<const S> v) {
    const std::size_t d = r.dimension();
    if (v.size() != d) throw ShapeMismatch("increment dimension does not match tensor");
    Tensor<S> out(d, r.depth());
    out.level(0)[0] = r.level(0)[0];
    std::vector<S> acc;
    std::vector<S> next;
    for (std::size_t k = 1; k <= r.depth(); ++k) {
        // level k of r ⊗ exp(v): t_0 = r_0, t_j = r_j + t_{j-1} ⊗ v / (k - j + 1)
        auto r0 = r.level(0);
        acc.assign(r0.begin(), r0.end());
        for (std::size_t j = 1; j <= k; ++j) {
            auto rj = r.level(j);
            const S inv = reciprocal<S>(k - j + 1);
            next.assign(rj.begin(), rj.end());
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (is_zero(acc[i])) continue;
                const S head = acc[i] * inv;
                S* row = next.data() + i * d;
                for (std::size_t l = 0; l < d; ++l) {
                    if (is_zero(v[l])) continue;
                    add_product(row[l], head, v[l]);
                }
            }
            acc.swap(next);
        }
        std::copy(acc.begin(), acc.end(), out.level(k).begin());
    }
    return out;
}

void require_permutation(std::span<const std::size_t> sigma, std::size_t k) {
    if (sigma.size() != k)
        throw InvalidArgument("permutation has " + std::to_string(sigma.size()) + " entries, expected " +
                              std::to_string(k));
    std::vector<bool> seen(k, false);
    for (std::size_t image : sigma) {
        if (image >= k || seen[image]) throw InvalidArgument("not a permutation");
        seen[image] = true;
    }
}

Permutation inverse(std::span<const std::size_t> sigma) {
    require_permutation(sigma, sigma.size());
    Permutation inv(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) inv[sigma[j]] = j;
    return inv;
}

template <Scalar S>
std::vector<S> permute_level(std::span<const S> level, std::size_t dimension, std::span<const std::size_t> sigma) {
    const std::size_t k = sigma.size();
    require_permutation(sigma, k);
    if (level.size() != level_size(dimension, k)) throw ShapeMismatch("level size does not match permutation order");
    std::vector<std::size_t> weight(k);
    for (std::size_t j = 0; j < k; ++j) weight[j] = level_size(dimension, k - 1 - j);
    std::vector<S> out(level.size());
    std::vector<std::size_t> word(k, 0);
    for (std::size_t w = 0; w < level.size(); ++w) {
        std::size_t src = 0;
        for (std::size_t j = 0; j < k; ++j) src += word[sigma[j]] * weight[j];
        out[w] = level[src];
        for (std::size_t pos = k; pos-- > 0;) {
            if (++word[pos] < dimension) break;
            word[pos] = 0;
        }
    }
    return out;
}

template <Scalar S>
Tensor<S> permute(const Tensor<S>& x, std::size_t degree, std::span<const std::size_t> sigma) {
    if (degree > x.depth()) throw InvalidArgument("permutation degree exceeds depth");
    require_permutation(sigma, degree);
    Tensor<S> out = x;
    auto permuted = permute_level(x.level(degree), x.dimension(), sigma);
    std::copy(permuted.begin(), permuted.end(), out.level(degree).begin());
    return out;
}

Rational level_l1_exact(std::span<const Rational> level) {
    Rational sum;
    for (const auto& c : level) sum += abs(c);
    return sum;
}

Rational level_l2_squared_exact(std::span<const Rational> level) {
    Rational sum;
    for (const auto& c : level) add_product(sum, c, c);
    return sum;
}

namespace {

// Neumaier compensated summation; long levels otherwise lose ~size * eps
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) carry_ += (sum_ - t) + x;
        else carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace

template <Scalar S>
double level_norm(std::span<const S> level, NormKind kind) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (kind == NormKind::L1Projective) return to_double(level_l1_exact(level));
        return std::sqrt(to_double(level_l2_squared_exact(level)));
    } else {
        CompensatedSum sum;
        if (kind == NormKind::L1Projective) {
            for (const auto& c : level) sum.add(magnitude(c));
            return sum.value();
        }
        // scaled accumulation guards against overflow for large coefficients
        double largest = 0.0;
        for (const auto& c : level) largest = std::max(largest, magnitude(c));
        if (largest == 0.0) return 0.0;
        for (const auto& c : level) {
            const double r = magnitude(c) / largest;
            sum.add(r * r);
        }
        return largest * std::sqrt(sum.value());
    }
}

template <Scalar S>
double level_norm(const Tensor<S>& x, std::size_t degree, NormKind kind) {
    return level_norm<S>(x.level(degree), kind);
}

template <Scalar S>
double max_abs_difference(std::span<const S> a, std::span<const S> b) {
    if (a.size() != b.size()) throw ShapeMismatch("size mismatch");
    if constexpr (std::is_same_v<S, Rational>) {
        Rational worst;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == b[i]) continue;
            Rational diff = abs(a[i] - b[i]);
            if (diff > worst) worst = diff;
        }
        return to_double(worst);
    } else {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, magnitude(S(a[i] - b[i])));
        return worst;
    }
}

template <Scalar S>
double max_abs_difference(const Tensor<S>& a, const Tensor<S>& b) {
    require_same_shape(a, b);
    return max_abs_difference<S>(a.coefficients(), b.coefficients());
}

template <Scalar S>
Tensor<S> dilate(const Tensor<S>& x, const S& lambda) {
    Tensor<S> out = x;
    S power = from_integer<S>(1);
    for (std::size_t k = 1; k <= x.depth(); ++k) {
        power *= lambda;
        for (auto& c : out.level(k)) c *= power;
    }
    return out;
}

template <RealScalar S>
Tensor<S> dilate(const Tensor<S>& x, const Complex& lambda) {
    if (lambda.imag() != 0.0)
        throw InvalidArgument("non-real dilation of a real tensor; complexify first");
    if constexpr (std::is_same_v<S, Rational>) return dilate(x, rational_from_double(lambda.real()));
    else return dilate(x, lambda.real());
}

Tensor<double> to_f64(const Tensor<Rational>& x) {
    Tensor<double> out(x.dimension(), x.depth());
    auto src = x.coefficients();
    auto dst = out.coefficients();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = to_double(src[i]);
    return out;
}

#define SIGALG_INSTANTIATE(S)                                                                       \
    template class Tensor<S>;                                                                       \
    template void require_same_shape(const Tensor<S>&, const Tensor<S>&);                          \
    template Tensor<S> operator+(const Tensor<S>&, const Tensor<S>&);                              \
    template Tensor<S> operator-(const Tensor<S>&, const Tensor<S>&);                              \
    template Tensor<S> scale(const Tensor<S>&, const S&);                                          \
    template Tensor<S> multiply(const Tensor<S>&, const Tensor<S>&);                               \
    template std::vector<S> outer(std::span<const S>, std::span<const S>);                         \
    template Tensor<S> tensor_exp(const Tensor<S>&);                                               \
    template Tensor<S> tensor_log(const Tensor<S>&);                                               \
    template Tensor<S> from_vector(std::span<const S>, std::size_t);                               \
    template Tensor<S> exp_of_vector(std::span<const S>, std::size_t);                             \
    template Tensor<S> multiply_by_exp(const Tensor<S>&, std::span<const S>);                      \
    template Tensor<S> permute(const Tensor<S>&, std::size_t, std::span<const std::size_t>);       \
    template std::vector<S> permute_level(std::span<const S>, std::size_t, std::span<const std::size_t>); \
    template double level_norm(std::span<const S>, NormKind);                                      \
    template double level_norm(const Tensor<S>&, std::size_t, NormKind);                           \
    template double max_abs_difference(std::span<const S>, std::span<const S>);                    \
    template double max_abs_difference(const Tensor<S>&, const Tensor<S>&);                        \
    template Tensor<S> dilate(const Tensor<S>&, const S&);

SIGALG_INSTANTIATE(Rational)
SIGALG_INSTANTIATE(double)
SIGALG_INSTANTIATE(Complex)

#undef SIGALG_INSTANTIATE

template Tensor<Rational> dilate(const Tensor<Rational>&, const Complex&);
template Tensor<double> dilate(const Tensor<double>&, const Complex&);

}  // namespace sigalg
