#include "sigalg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sigalg/errors.hpp"

namespace sigalg {

template <Scalar S>
DegreePattern extract_pattern(const Tensor<S>& g, double tol) {
    if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");
    if (is_exact_v<S> && tol != 0.0) throw InvalidArgument("rational mode tests exact zeros; tolerance must be 0");
    DegreePattern pattern;
    pattern.depth = g.depth();
    pattern.exact = is_exact_v<S>;
    for (std::size_t n = 1; n <= g.depth(); ++n) {
        const auto level = g.level(n);
        bool nonzero;
        if constexpr (is_exact_v<S>)
            nonzero = std::any_of(level.begin(), level.end(), [](const S& c) { return !is_zero(c); });
        else
            nonzero = std::any_of(level.begin(), level.end(), [tol](const S& c) { return magnitude(c) > tol; });
        if (nonzero) pattern.nonzero.push_back(n);
    }
    return pattern;
}

std::optional<std::uint64_t> min_modulus(std::span<const std::uint64_t> elements) {
    if (elements.empty()) throw InvalidArgument("min_modulus of an empty set");
    std::uint64_t g = 0;
    for (auto e : elements) {
        if (e == 0) throw InvalidArgument("elements must be positive integers");
        g = std::gcd(g, e);
    }
    if (g >= 2) return g;
    return std::nullopt;
}

std::vector<std::uint64_t> semigroup_elements(std::span<const std::uint64_t> generators, std::uint64_t bound) {
    std::vector<bool> member(bound + 1, false);
    member[0] = true;
    for (std::uint64_t x = 1; x <= bound; ++x)
        for (auto g : generators)
            if (g != 0 && g <= x && member[x - g]) {
                member[x] = true;
                break;
            }
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x <= bound; ++x)
        if (member[x]) out.push_back(x);
    return out;
}

std::uint64_t frobenius_number(std::span<const std::uint64_t> generators) {
    if (generators.empty()) throw InvalidArgument("no generators");
    std::uint64_t g = 0;
    for (auto e : generators) {
        if (e < 2) throw InvalidArgument("generators must be at least 2");
        g = std::gcd(g, e);
    }
    if (g != 1) throw InvalidArgument("generators must have gcd 1 (found " + std::to_string(g) + ")");
    const auto [lo, hi] = std::minmax_element(generators.begin(), generators.end());
    if (*lo > 1'000'000 / *hi) throw InvalidArgument("min * max of generators exceeds the scan guard of 10^6");
    const std::uint64_t bound = *lo * *hi;

    const auto elements = semigroup_elements(generators, bound);
    std::vector<bool> member(bound + 1, false);
    for (auto e : elements) member[e] = true;
    std::uint64_t largest_gap = 0;
    for (std::uint64_t x = 1; x <= bound; ++x)
        if (!member[x]) largest_gap = x;
    return largest_gap;
}

AdditivityResult verify_additive(std::span<const std::uint64_t> elements, std::uint64_t bound) {
    std::vector<std::uint64_t> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<bool> member(bound + 1, false);
    for (auto e : sorted)
        if (e <= bound) member[e] = true;

    for (std::uint64_t s = 2; s <= bound; ++s) {
        if (member[s]) continue;
        for (auto i : sorted) {
            if (2 * i > s) break;
            if (member[s - i]) return {false, AdditivityResult::Counterexample{i, s - i, s}};
        }
    }
    return {};
}

template DegreePattern extract_pattern(const Tensor<Rational>&, double);
template DegreePattern extract_pattern(const Tensor<double>&, double);
template DegreePattern extract_pattern(const Tensor<Complex>&, double);

}  // namespace sigalg
