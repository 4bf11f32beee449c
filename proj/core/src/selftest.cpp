#include "sigalg/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "sigalg/asymptotics.hpp"
#include "sigalg/complexify.hpp"
#include "sigalg/errors.hpp"
#include "sigalg/lie.hpp"
#include "sigalg/path.hpp"
#include "sigalg/semigroup.hpp"
#include "sigalg/shuffle.hpp"
#include "sigalg/signature.hpp"
#include "sigalg/tensor.hpp"

namespace sigalg {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

template <class... Args>
std::string format(const char* pattern, Args... args) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, args...);
    return buffer;
}

constexpr NormKind kBothNorms[] = {NormKind::L1Projective, NormKind::L2HilbertSchmidt};

class Suites {
public:
    explicit Suites(const SelftestConfig& config) : config_(config) {}

    std::size_t depth_or(std::size_t fallback) const { return config_.depth.value_or(fallback); }

    std::size_t draw_dimension(Rng& rng, std::int64_t lo, std::int64_t hi) const {
        if (config_.dimension) return *config_.dimension;
        return static_cast<std::size_t>(rng.between(lo, hi));
    }

    Rng rng_for(std::uint64_t suite) const { return Rng(config_.seed + 0x9E3779B97F4A7C15ULL * suite); }

    Outcome chen_vs_riemann() const {
        Rng rng = rng_for(1);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto d = draw_dimension(rng, 1, 3);
            const auto segs = static_cast<std::size_t>(rng.between(1, 5));
            const auto path = to_f64(random_rational_path(rng, d, segs));
            const auto exact = signature(path, 5);
            const auto approx = riemann_signature(path, 5, std::ldexp(1.0, -16));
            worst = std::max(worst, max_abs_difference(exact, approx));
        }
        return {worst <= 1e-5, format("worst deviation %.3g over 20 paths (limit 1e-5)", worst)};
    }

    Outcome segment_exact() const {
        Rng rng = rng_for(2);
        constexpr std::size_t depth = 8;
        for (int trial = 0; trial < 10; ++trial) {
            const auto d = draw_dimension(rng, 1, 3);
            std::vector<Rational> v(d);
            for (auto& c : v) c = rng.rational(5, 3);
            std::vector<Rational> coords(d);
            coords.insert(coords.end(), v.begin(), v.end());
            const auto sig = signature(Path<Rational>(d, coords), depth);
            // g_k(w) = v_{w_1} ... v_{w_k} / k!
            std::vector<Rational> power{Rational(1)};
            Rational factorial(1);
            for (std::size_t k = 1; k <= depth; ++k) {
                std::vector<Rational> next;
                next.reserve(power.size() * d);
                for (const auto& p : power)
                    for (const auto& c : v) next.push_back(p * c);
                power = std::move(next);
                factorial *= static_cast<long>(k);
                auto level = sig.level(k);
                for (std::size_t i = 0; i < power.size(); ++i)
                    if (level[i] != power[i] / factorial)
                        return {false, format("trial %d: level %zu word %zu differs", trial, k, i)};
            }
        }
        return {true, "10 segments exact through depth 8"};
    }

    Outcome shuffle_identity() const {
        Rng rng = rng_for(3);
        const std::size_t depth = depth_or(6);
        double worst_f64 = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto d = draw_dimension(rng, 2, 2);
            const auto path = random_rational_path(rng, d, static_cast<std::size_t>(rng.between(1, 4)));
            const auto exact = group_like_check(signature(path, depth), 0.0);
            if (!exact.pass) return {false, format("trial %d: nonzero rational residual", trial)};
            const auto approx = group_like_check(signature(to_f64(path), depth), 1e-10);
            for (const auto& p : approx.pairs) worst_f64 = std::max(worst_f64, p.residual);
            if (!approx.pass) return {false, format("trial %d: f64 residual %.3g", trial, worst_f64)};
        }
        return {true, format("depth %zu: rational residual 0, f64 worst %.3g", depth, worst_f64)};
    }

    Outcome factorial_decay() const {
        Rng rng = rng_for(4);
        const std::size_t depth = depth_or(12);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto d = draw_dimension(rng, 1, 3);
            const auto path = to_f64(random_rational_path(rng, d, static_cast<std::size_t>(rng.between(1, 5))));
            const auto sig = signature(path, depth);
            for (NormKind kind : kBothNorms) {
                const double length = path_length(path, kind);
                double factorial = 1.0;
                for (std::size_t n = 1; n <= depth; ++n) {
                    factorial *= static_cast<double>(n);
                    const double b = factorial * level_norm(sig, n, kind);
                    const double bound = std::pow(length, static_cast<double>(n));
                    worst = std::max(worst, b / bound);
                    if (b > bound * (1.0 + kDecaySlack))
                        return {false, format("trial %d (%s) degree %zu: %.17g > %.17g", trial,
                                              std::string(to_string(kind)).c_str(), n, b, bound)};
                }
            }
        }
        return {true, format("depth %zu: worst b_n / L^n = %.6g", depth, worst)};
    }

    Outcome supermultiplicativity() const {
        Rng rng = rng_for(5);
        const std::size_t depth = depth_or(10);
        std::vector<Tensor<double>> inputs;
        for (int trial = 0; trial < 10; ++trial) {
            const auto d = draw_dimension(rng, 1, 3);
            inputs.push_back(signature(to_f64(random_rational_path(rng, d, static_cast<std::size_t>(rng.between(1, 5)))), depth));
        }
        for (const char* expr : {"[1,2]", "[1,[1,2]]", "[1,[1,2]] - 1/2*[2,[1,2]]", "[[1,2],[1,[1,2]]]"}) {
            const auto lie = lie_generator(expr, 2);
            inputs.push_back(to_f64(tensor_exp(lie.embed(depth))));
        }
        std::size_t checked = 0;
        for (const auto& g : inputs) {
            for (NormKind kind : kBothNorms) {
                const auto report = analyze(g, kind);
                ++checked;
                if (!report.violations.empty()) {
                    const auto& v = report.violations.front();
                    return {false, format("b_%zu = %.17g < b_%zu b_%zu = %.17g", v.i + v.j, v.b_sum, v.i, v.j, v.product)};
                }
            }
        }
        return {true, format("%zu group-like reports to depth %zu, no violations", checked, depth)};
    }

    Outcome counterexamples() const {
        const auto area = tensor_exp(lie_generator("[1,2]", 2).embed(8));
        const auto area_pattern = extract_pattern(area, 0.0);
        for (std::size_t k = 1; k <= 8; k += 2)
            for (const auto& c : area.level(k))
                if (!is_zero(c)) return {false, format("exp([1,2]) has nonzero level %zu", k)};
        if (area_pattern.nonzero != std::vector<std::uint64_t>{2, 4, 6, 8})
            return {false, "exp([1,2]) pattern is not {2,4,6,8}"};

        const auto cubic = tensor_exp(lie_generator("[1,[1,2]]", 2).embed(9));
        for (auto n : extract_pattern(cubic, 0.0).nonzero)
            if (n % 3 != 0) return {false, format("exp([1,[1,2]]) nonzero at degree %llu", static_cast<unsigned long long>(n))};

        double worst = 0.0;
        for (const auto& [g, modulus] : {std::pair{&area, 2}, std::pair{&cubic, 3}}) {
            const auto report = dilation_invariance_check(*g, static_cast<std::uint64_t>(modulus));
            for (const auto& r : report.residuals) worst = std::max(worst, r.residual);
            if (!report.pass || !report.agree) return {false, format("dilation check failed for modulus %d", modulus)};
        }
        const auto line = tensor_exp(lie_generator("1", 2).embed(4));
        const auto report = dilation_invariance_check(line, 2);
        if (report.pass || !report.agree) return {false, "exp(e1) passed the modulus-2 dilation check"};
        return {true, format("patterns exact, dilation residual worst %.3g", worst)};
    }

    Outcome semigroup_examples() const {
        const std::vector<std::uint64_t> g610{6, 10}, g35{3, 5}, g7{7};
        const auto a = semigroup_elements(g610, 60);
        const auto b = semigroup_elements(g35, 60);
        const auto c = semigroup_elements(g7, 70);
        if (min_modulus(a) != std::optional<std::uint64_t>(2)) return {false, "<6,10> modulus is not 2"};
        if (min_modulus(b).has_value()) return {false, "<3,5> reported a modulus"};
        if (frobenius_number(g35) != 7) return {false, "frobenius(3,5) != 7"};
        if (min_modulus(c) != std::optional<std::uint64_t>(7)) return {false, "(7) modulus is not 7"};

        Rng rng = rng_for(7);
        const std::size_t depth = depth_or(10);
        for (int trial = 0; trial < 10; ++trial) {
            const auto d = draw_dimension(rng, 1, 2);
            const auto path = random_rational_path(rng, d, static_cast<std::size_t>(rng.between(1, 4)));
            const auto pattern = extract_pattern(signature(path, depth), 0.0);
            const auto result = verify_additive(pattern.nonzero, depth);
            if (!result.closed) return {false, format("trial %d: nonzero degrees not additively closed", trial)};
        }
        return {true, format("semigroup examples hold; 10 signature patterns closed to depth %zu", depth)};
    }

    Outcome tree_reduction() const {
        using P = Path<Rational>;
        const Rational h(1, 2);
        const P out_back({{0, 0}, {Rational(3, 2), -h}, {0, 0}});
        const P partial({{0, 0}, {3, -1}, {Rational(3, 2), -h}});
        const P nested({{0, 0}, {1, 0}, {1, 1}, {1, 0}, {0, 0}});
        const P origin({{0, 0}});
        const std::pair<const P*, P> cases[] = {
            {&out_back, origin},
            {&partial, P({{0, 0}, {Rational(3, 2), -h}})},
            {&nested, origin},
        };
        for (const auto& [input, expected] : cases) {
            const auto reduced = tree_reduce(*input);
            if (!(reduced == expected)) return {false, "tree_reduce output differs from expected vertices"};
            if (!(tree_reduce(reduced) == reduced)) return {false, "tree_reduce is not idempotent"};
            if (!(signature(reduced, 6) == signature(*input, 6))) return {false, "tree_reduce changed the signature"};
        }
        if (!(signature(out_back, 8) == Tensor<Rational>::unit(2, 8))) return {false, "out-and-back signature is not the unit"};

        Rng rng = rng_for(8);
        for (int trial = 0; trial < 10; ++trial) {
            // a path glued to its reversal around a random excursion
            const auto p = random_rational_path(rng, 2, 3);
            std::vector<std::vector<Rational>> rows;
            for (std::size_t v = 0; v < p.vertex_count(); ++v) rows.emplace_back(p.vertex(v).begin(), p.vertex(v).end());
            for (std::size_t v = p.vertex_count() - 1; v-- > 0;) rows.push_back(rows[v]);
            const P loop(rows);
            if (!(tree_reduce(loop) == origin)) return {false, "retraced path did not reduce to a point"};
        }
        return {true, "examples reduce as expected; signatures preserved to depth 6"};
    }

    Outcome length_property() const {
        const Path<Rational> staircase({{0, 0}, {1, 0}, {1, 1}});
        const auto stair = length_estimate(staircase, NormKind::L1Projective, 8);
        if (!stair.saturated.value_or(false) || stair.sup != std::optional<double>(2.0))
            return {false, "staircase S_8 differs from L = 2"};
        const Path<Rational> monotone({{0, 0, 0}, {Rational(1, 3), 0, 0}, {Rational(1, 3), 2, 0}, {1, 2, Rational(1, 2)}});
        if (!length_estimate(monotone, NormKind::L1Projective, 8).saturated.value_or(false))
            return {false, "monotone staircase not saturated"};

        Rng rng = rng_for(9);
        const std::size_t depth = depth_or(8);
        for (int trial = 0; trial < 20; ++trial) {
            const auto d = draw_dimension(rng, 1, 3);
            const auto path = to_f64(random_rational_path(rng, d, static_cast<std::size_t>(rng.between(1, 5))));
            for (NormKind kind : kBothNorms) {
                const auto est = length_estimate(path, kind, depth);
                if (!est.within_bound) return {false, format("trial %d: S_N exceeds L", trial)};
                double previous = 0.0;
                for (const auto& term : est.report.terms) {
                    if (!term.running_sup) continue;
                    if (*term.running_sup < previous) return {false, format("trial %d: S_N decreased", trial)};
                    previous = *term.running_sup;
                }
            }
        }
        return {true, format("staircases saturate exactly; 20 paths satisfy S_N <= L to depth %zu", depth)};
    }

    Outcome taylor_identities() const {
        Rng rng = rng_for(10);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto d = static_cast<std::size_t>(rng.between(1, 3));
            const auto k = static_cast<std::size_t>(rng.between(1, 3));
            const auto sample = random_complex_tensor(rng, d, k, Complex{});
            const auto z = sample.level(k);
            std::vector<Complex> conj(z.begin(), z.end());
            std::vector<Complex> real(z.size());
            std::vector<double> re(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) {
                conj[i] = std::conj(conj[i]);
                real[i] = {z[i].real(), 0.0};
                re[i] = z[i].real();
            }
            for (NormKind kind : kBothNorms) {
                const double restriction = std::abs(taylor_norm(real, kind) - level_norm<double>(re, kind));
                const double symmetry = std::abs(taylor_norm(z, kind) - taylor_norm(conj, kind));
                worst = std::max({worst, restriction, symmetry});
                if (restriction > 1e-12 || symmetry > 1e-12)
                    return {false, format("trial %d (%s): restriction %.3g, symmetry %.3g", trial,
                                          std::string(to_string(kind)).c_str(), restriction, symmetry)};
                double coarse = taylor_norm(z, kind, 8);
                for (std::size_t grid = 16; grid <= 2048; grid *= 2) {
                    const double fine = taylor_norm(z, kind, grid);
                    if (fine < coarse - 1e-12) return {false, format("trial %d: grid %zu lowered the estimate", trial, grid)};
                    coarse = fine;
                }
            }
        }
        return {true, format("100 samples, worst identity gap %.3g", worst)};
    }

private:
    SelftestConfig config_;
};

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
    if (config.depth && *config.depth < 2) throw InvalidArgument("selftest depth must be at least 2");
    if (config.dimension && *config.dimension == 0) throw InvalidArgument("selftest dimension must be positive");
    const Suites suites(config);
    const std::pair<const char*, Outcome (Suites::*)() const> table[] = {
        {"chen_vs_riemann", &Suites::chen_vs_riemann},
        {"segment_exact", &Suites::segment_exact},
        {"shuffle_identity", &Suites::shuffle_identity},
        {"factorial_decay", &Suites::factorial_decay},
        {"supermultiplicativity", &Suites::supermultiplicativity},
        {"counterexample_patterns", &Suites::counterexamples},
        {"semigroup_examples", &Suites::semigroup_examples},
        {"tree_reduction", &Suites::tree_reduction},
        {"length_property", &Suites::length_property},
        {"taylor_identities", &Suites::taylor_identities},
    };
    std::vector<SuiteResult> results;
    for (const auto& [name, run] : table) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = std::invoke(run, suites);
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        results.push_back({name, outcome.pass, std::move(outcome.detail), elapsed.count()});
    }
    return results;
}

}  // namespace sigalg
