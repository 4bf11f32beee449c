#include "sigalg/complexify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "sigalg/errors.hpp"

namespace sigalg {

namespace {

template <RealScalar S>
Tensor<Complex> embed(const Tensor<S>& x) {
    Tensor<Complex> out(x.dimension(), x.depth());
    auto src = x.coefficients();
    auto dst = out.coefficients();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = Complex(to_double(src[i]), 0.0);
    return out;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// f(t) = sum_i |x_i cos t - y_i sin t|
double l1_profile(std::span<const Complex> z, double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    double sum = 0.0;
    for (const auto& w : z) sum += std::abs(w.real() * c - w.imag() * s);
    return sum;
}

double l1_taylor_norm(std::span<const Complex> z, std::size_t grid) {
    // f(t) = sum_i |x_i cos t - y_i sin t| has period pi and equals A cos t + B sin t between
    // consecutive sign changes, so each piece peaks at an endpoint or at atan2(B, A)
    struct Entry {
        double angle;
        double x;
        double y;
    };
    std::vector<Entry> entries;
    for (const auto& w : z) {
        if (w == Complex{}) continue;
        double theta = std::atan2(w.real(), w.imag());
        if (theta < 0.0) theta += std::numbers::pi;
        if (theta >= std::numbers::pi) theta -= std::numbers::pi;
        entries.push_back({theta, w.real(), w.imag()});
    }
    if (entries.empty()) return 0.0;
    std::sort(entries.begin(), entries.end(), [](const Entry& p, const Entry& q) { return p.angle < q.angle; });

    std::vector<std::size_t> group_start;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (i == 0 || entries[i].angle != entries[i - 1].angle) group_start.push_back(i);
    group_start.push_back(entries.size());
    const std::size_t groups = group_start.size() - 1;
    const auto group_angle = [&](std::size_t g) {
        return g < groups ? entries[group_start[g]].angle : entries.front().angle + std::numbers::pi;
    };

    std::vector<double> sign(entries.size());
    const double mid0 = 0.5 * (group_angle(0) + group_angle(1));
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const double v = entries[i].x * std::cos(mid0) - entries[i].y * std::sin(mid0);
        sign[i] = v < 0.0 ? -1.0 : 1.0;
        a += sign[i] * entries[i].x;
        b -= sign[i] * entries[i].y;
    }

    std::vector<std::pair<double, double>> candidates;  // (estimate, t)
    for (std::size_t g = 0; g < groups; ++g) {
        const double lo = group_angle(g);
        const double hi = group_angle(g + 1);
        if (g > 0) {
            for (std::size_t i = group_start[g]; i < group_start[g + 1]; ++i) {
                a -= 2.0 * sign[i] * entries[i].x;
                b += 2.0 * sign[i] * entries[i].y;
                sign[i] = -sign[i];
            }
        }
        candidates.emplace_back(a * std::cos(lo) + b * std::sin(lo), lo);
        double peak = std::atan2(b, a) - lo;
        peak -= kTwoPi * std::floor(peak / kTwoPi);
        if (peak <= hi - lo) candidates.emplace_back(std::hypot(a, b), lo + peak);
    }

    // incremental A, B drift slightly; settle the leaders by direct evaluation
    const std::size_t keep = std::min<std::size_t>(8, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep), candidates.end(),
                      [](const auto& p, const auto& q) { return p.first > q.first; });
    double best = 0.0;
    for (std::size_t c = 0; c < keep; ++c) best = std::max(best, l1_profile(z, candidates[c].second));
    const double h = kTwoPi / static_cast<double>(grid);
    for (std::size_t j = 0; j < grid; ++j) best = std::max(best, l1_profile(z, h * static_cast<double>(j)));
    return best;
}

double l2_taylor_norm(std::span<const Complex> z) {
    // ||x cos t - y sin t||^2 = alpha cos^2 t + beta sin^2 t - gamma sin 2t
    double scale = 0.0;
    for (const auto& w : z) scale = std::max({scale, std::abs(w.real()), std::abs(w.imag())});
    if (scale == 0.0) return 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    for (const auto& w : z) {
        const double x = w.real() / scale;
        const double y = w.imag() / scale;
        alpha += x * x;
        beta += y * y;
        gamma += x * y;
    }
    const double peak = 0.5 * (alpha + beta) + std::hypot(0.5 * (alpha - beta), gamma);
    return scale * std::sqrt(peak);
}

}  // namespace

Tensor<Complex> complexify(const Tensor<double>& x) { return embed(x); }
Tensor<Complex> complexify(const Tensor<Rational>& x) { return embed(x); }

double taylor_norm(std::span<const Complex> z, NormKind kind, std::size_t grid) {
    if (kind == NormKind::L2HilbertSchmidt) return l2_taylor_norm(z);
    if (grid < kMinTaylorGrid) throw InvalidArgument("Taylor norm grid must have at least 4 points");
    return l1_taylor_norm(z, grid);
}

Complex root_of_unity(std::uint64_t d) {
    if (d == 0) throw InvalidArgument("root of unity order must be positive");
    if (d == 1) return {1.0, 0.0};
    if (d == 2) return {-1.0, 0.0};
    if (d == 4) return {0.0, 1.0};
    return std::polar(1.0, kTwoPi / static_cast<double>(d));
}

template <Scalar S>
DilationReport dilation_invariance_check(const Tensor<S>& g, std::uint64_t modulus, NormKind kind, double tol) {
    if (modulus < 2) throw InvalidArgument("dilation modulus must be at least 2");
    if (g.constant() != from_integer<S>(1)) throw InvalidArgument("dilation check requires constant term 1");
    if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");

    Tensor<Complex> lifted = [&] {
        if constexpr (std::is_same_v<S, Complex>) return g;
        else return complexify(g);
    }();
    const auto rotated = dilate(lifted, root_of_unity(modulus));

    DilationReport report;
    report.modulus = modulus;
    report.kind = kind;
    report.tolerance = tol;
    for (std::size_t k = 1; k <= g.depth(); ++k) {
        auto before = lifted.level(k);
        auto after = rotated.level(k);
        std::vector<Complex> diff(before.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = after[i] - before[i];
        const double residual = level_norm<Complex>(diff, kind);
        report.residuals.push_back({k, residual});
        report.pass = report.pass && residual <= tol;
    }

    report.pattern = extract_pattern(g, is_exact_v<S> ? 0.0 : tol);
    report.pattern_verdict = std::all_of(report.pattern.nonzero.begin(), report.pattern.nonzero.end(),
                                         [modulus](std::uint64_t n) { return n % modulus == 0; });
    report.agree = report.pass == report.pattern_verdict;
    return report;
}

template DilationReport dilation_invariance_check(const Tensor<Rational>&, std::uint64_t, NormKind, double);
template DilationReport dilation_invariance_check(const Tensor<double>&, std::uint64_t, NormKind, double);
template DilationReport dilation_invariance_check(const Tensor<Complex>&, std::uint64_t, NormKind, double);

}  // namespace sigalg
