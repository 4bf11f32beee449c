#include "sigalg/shuffle.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "sigalg/errors.hpp"

namespace sigalg {

namespace {

ShuffleSet build_shuffles(std::size_t m, std::size_t n) {
    ShuffleSet set{m, n, {}};
    const std::size_t k = m + n;
    // positions of the first block, lexicographic
    std::vector<std::size_t> first(m);
    for (std::size_t a = 0; a < m; ++a) first[a] = a;
    while (true) {
        Permutation sigma(k);
        std::vector<bool> taken(k, false);
        for (std::size_t a = 0; a < m; ++a) {
            sigma[a] = first[a];
            taken[first[a]] = true;
        }
        std::size_t b = m;
        for (std::size_t slot = 0; slot < k; ++slot)
            if (!taken[slot]) sigma[b++] = slot;
        set.permutations.push_back(std::move(sigma));

        std::size_t a = m;
        while (a > 0 && first[a - 1] == n + a - 1) --a;
        if (a == 0) break;
        ++first[a - 1];
        for (std::size_t c = a; c < m; ++c) first[c] = first[c - 1] + 1;
    }
    return set;
}

void require_shuffle_order(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw InvalidArgument("shuffle blocks must be nonempty");
    if (m + n > kMaxShuffleOrder)
        throw InvalidArgument("shuffle order " + std::to_string(m + n) + " exceeds the enumeration guard of " +
                              std::to_string(kMaxShuffleOrder));
}

}  // namespace

const ShuffleSet& enumerate_shuffles(std::size_t m, std::size_t n) {
    require_shuffle_order(m, n);
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<const ShuffleSet>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{m, n}];
    if (!slot) slot = std::make_unique<const ShuffleSet>(build_shuffles(m, n));
    return *slot;
}

template <Scalar S>
std::vector<S> shuffle_project(const Tensor<S>& g, std::size_t m, std::size_t n) {
    require_shuffle_order(m, n);
    const std::size_t k = m + n;
    if (k > g.depth()) throw InvalidArgument("m + n exceeds the tensor depth");
    const std::size_t d = g.dimension();
    const auto& shuffles = enumerate_shuffles(m, n);
    const auto source = g.level(k);

    // weights[s][a]: place value of letter a after interleaving by shuffle s
    std::vector<std::vector<std::size_t>> weights;
    weights.reserve(shuffles.permutations.size());
    for (const auto& sigma : shuffles.permutations) {
        std::vector<std::size_t> w(k);
        for (std::size_t a = 0; a < k; ++a) w[a] = level_size(d, k - 1 - sigma[a]);
        weights.push_back(std::move(w));
    }

    std::vector<S> out(source.size());
    std::vector<std::size_t> word(k, 0);
    for (std::size_t x = 0; x < source.size(); ++x) {
        S acc{};
        for (const auto& w : weights) {
            std::size_t y = 0;
            for (std::size_t a = 0; a < k; ++a) y += word[a] * w[a];
            acc += source[y];
        }
        out[x] = std::move(acc);
        for (std::size_t pos = k; pos-- > 0;) {
            if (++word[pos] < d) break;
            word[pos] = 0;
        }
    }
    return out;
}

template <Scalar S>
GroupLikeReport group_like_check(const Tensor<S>& g, double tol) {
    if (g.constant() != from_integer<S>(1)) throw InvalidArgument("group-like check requires constant term 1");
    if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");
    if (is_exact_v<S> && tol != 0.0) throw InvalidArgument("rational mode compares exactly; tolerance must be 0");

    GroupLikeReport report;
    report.tolerance = tol;
    const std::size_t limit = std::min(g.depth(), kMaxShuffleOrder);
    for (std::size_t k = 2; k <= limit; ++k) {
        for (std::size_t m = 1; m < k; ++m) {
            const std::size_t n = k - m;
            const auto lhs = outer<S>(g.level(m), g.level(n));
            const auto rhs = shuffle_project(g, m, n);
            bool ok;
            double residual;
            if constexpr (is_exact_v<S>) {
                ok = lhs == rhs;
                residual = ok ? 0.0 : max_abs_difference<S>(lhs, rhs);
            } else {
                residual = max_abs_difference<S>(lhs, rhs);
                ok = residual <= tol;
            }
            report.pass = report.pass && ok;
            report.pairs.push_back({m, n, residual});
        }
    }
    return report;
}

template std::vector<Rational> shuffle_project(const Tensor<Rational>&, std::size_t, std::size_t);
template std::vector<double> shuffle_project(const Tensor<double>&, std::size_t, std::size_t);
template std::vector<Complex> shuffle_project(const Tensor<Complex>&, std::size_t, std::size_t);
template GroupLikeReport group_like_check(const Tensor<Rational>&, double);
template GroupLikeReport group_like_check(const Tensor<double>&, double);
template GroupLikeReport group_like_check(const Tensor<Complex>&, double);

}  // namespace sigalg
