#include "sigalg/signature.hpp"

#include <cmath>

#include "sigalg/errors.hpp"

namespace sigalg {

template <RealScalar S>
Tensor<S> signature(const Path<S>& path, std::size_t depth) {
    if (depth == 0) throw InvalidArgument("signature depth must be at least 1");
    auto sig = Tensor<S>::unit(path.dimension(), depth);
    for (std::size_t s = 0; s < path.segment_count(); ++s) {
        const auto inc = path.increment(s);
        bool zero = true;
        for (const auto& c : inc) zero = zero && is_zero(c);
        if (zero) continue;
        sig = multiply_by_exp(sig, std::span<const S>(inc));
    }
    return sig;
}

Tensor<double> riemann_signature(const Path<double>& path, std::size_t depth, double mesh) {
    if (depth == 0) throw InvalidArgument("signature depth must be at least 1");
    if (!(mesh > 0.0) || mesh > 1.0) throw InvalidArgument("mesh must lie in (0, 1]");
    const std::size_t d = path.dimension();
    const auto steps = static_cast<std::size_t>(std::ceil(1.0 / mesh));

    auto sum = Tensor<double>::unit(d, depth);
    std::vector<double> delta(d);
    for (std::size_t s = 0; s < path.segment_count(); ++s) {
        const auto inc = path.increment(s);
        for (std::size_t i = 0; i < d; ++i) delta[i] = inc[i] / static_cast<double>(steps);
        for (std::size_t step = 0; step < steps; ++step) {
            // S_n += S_{n-1} ⊗ delta, highest level first so S_{n-1} is still the left-point value.
            for (std::size_t n = depth; n >= 1; --n) {
                auto prev = sum.level(n - 1);
                auto dst = sum.level(n);
                for (std::size_t i = 0; i < prev.size(); ++i) {
                    const double head = prev[i];
                    if (head == 0.0) continue;
                    double* row = dst.data() + i * d;
                    for (std::size_t l = 0; l < d; ++l) row[l] += head * delta[l];
                }
            }
        }
    }
    return sum;
}

template Tensor<Rational> signature(const Path<Rational>&, std::size_t);
template Tensor<double> signature(const Path<double>&, std::size_t);

}  // namespace sigalg
