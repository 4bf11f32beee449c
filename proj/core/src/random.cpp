#include "sigalg/random.hpp"

#include <numeric>
#include <utility>

#include "sigalg/errors.hpp"

namespace sigalg {

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidArgument("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    std::uint64_t x = next();
    while (limit != 0 && x >= limit) x = next();
    return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational Rng::rational(std::int64_t bound, std::int64_t denominator) {
    Rational q(static_cast<long>(between(-bound, bound)), static_cast<unsigned long>(denominator));
    q.canonicalize();
    return q;
}

Permutation Rng::permutation(std::size_t k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = k; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(i) - 1))]);
    return p;
}

Path<Rational> random_rational_path(Rng& rng, std::size_t dimension, std::size_t segments, std::int64_t bound,
                                    std::int64_t denominator) {
    if (bound < 1) throw InvalidArgument("coordinate bound must be positive");
    std::vector<Rational> coords(dimension);
    std::vector<Rational> cursor(dimension);
    for (std::size_t s = 0; s < segments; ++s) {
        std::vector<Rational> inc(dimension);
        bool zero;
        do {
            zero = true;
            for (auto& c : inc) {
                c = rng.rational(bound, denominator);
                zero = zero && sgn(c) == 0;
            }
        } while (zero);
        for (std::size_t i = 0; i < dimension; ++i) {
            cursor[i] += inc[i];
            coords.push_back(cursor[i]);
        }
    }
    return Path<Rational>(dimension, std::move(coords));
}

Tensor<Rational> random_rational_tensor(Rng& rng, std::size_t dimension, std::size_t depth, long constant,
                                        std::int64_t bound, std::int64_t denominator) {
    Tensor<Rational> t(dimension, depth);
    for (auto& c : t.coefficients()) c = rng.rational(bound, denominator);
    t.coefficients()[0] = constant;
    return t;
}

Tensor<double> random_real_tensor(Rng& rng, std::size_t dimension, std::size_t depth, double constant) {
    Tensor<double> t(dimension, depth);
    for (auto& c : t.coefficients()) c = rng.uniform(-1.0, 1.0);
    t.coefficients()[0] = constant;
    return t;
}

Tensor<Complex> random_complex_tensor(Rng& rng, std::size_t dimension, std::size_t depth, Complex constant) {
    Tensor<Complex> t(dimension, depth);
    for (auto& c : t.coefficients()) {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        c = Complex(re, im);
    }
    t.coefficients()[0] = constant;
    return t;
}

}  // namespace sigalg
