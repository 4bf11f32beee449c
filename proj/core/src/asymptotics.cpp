#include "sigalg/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "sigalg/errors.hpp"
#include "sigalg/signature.hpp"

namespace sigalg {

namespace {

Rational factorial(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational power(const Rational& base, unsigned n) {
    Rational out(1);
    for (unsigned i = 0; i < n; ++i) out *= base;
    return out;
}

}  // namespace

double exact_aware_root(const Rational& value, unsigned n) {
    if (sgn(value) <= 0) throw InvalidArgument("root of a nonpositive value");
    const double naive = std::pow(to_double(value), 1.0 / static_cast<double>(n));
    double down = naive;
    double up = naive;
    for (int step = 0; step < 3; ++step) {
        if (power(Rational(up), n) == value) return up;
        if (power(Rational(down), n) == value) return down;
        up = std::nextafter(up, HUGE_VAL);
        down = std::nextafter(down, 0.0);
    }
    return naive;
}

template <Scalar S>
AsymptoticsReport analyze(const Tensor<S>& g, NormKind kind, std::optional<double> length) {
    if (g.constant() != from_integer<S>(1)) throw InvalidArgument("analysis requires constant term 1");
    AsymptoticsReport report;
    report.depth = g.depth();
    report.kind = kind;
    report.exact = is_exact_v<S>;

    std::optional<double> running;
    double fact = 1.0;
    for (std::size_t n = 1; n <= g.depth(); ++n) {
        fact *= static_cast<double>(n);
        DegreeTerm term;
        term.degree = n;
        const auto level = g.level(n);
        if constexpr (is_exact_v<S>) {
            const Rational nf = factorial(n);
            if (kind == NormKind::L1Projective) {
                const Rational b = nf * level_l1_exact(level);
                term.b = to_double(b);
                term.b_exact = to_string(b);
                if (sgn(b) > 0) term.a = exact_aware_root(b, static_cast<unsigned>(n));
            } else {
                const Rational b2 = nf * nf * level_l2_squared_exact(level);
                term.b = std::sqrt(to_double(b2));
                term.b_exact = to_string(b2);
                if (sgn(b2) > 0) term.a = exact_aware_root(b2, static_cast<unsigned>(2 * n));
            }
        } else {
            term.b = fact * level_norm<S>(level, kind);
            if (term.b > 0.0) term.a = std::pow(term.b, 1.0 / static_cast<double>(n));
        }
        if (term.a) {
            report.nonzero_degrees.push_back(n);
            running = running ? std::max(*running, *term.a) : *term.a;
        }
        term.running_sup = running;
        report.terms.push_back(std::move(term));
    }
    report.sup = running;

    for (std::size_t i = 1; i <= g.depth(); ++i)
        for (std::size_t j = i; i + j <= g.depth(); ++j) {
            const double lhs = report.terms[i + j - 1].b;
            const double rhs = report.terms[i - 1].b * report.terms[j - 1].b;
            if (lhs < rhs * (1.0 - kSupermultiplicativeSlack)) report.violations.push_back({i, j, lhs, rhs});
        }

    if (length) {
        report.length = length;
        if (report.sup) {
            if (*length > 0.0) report.ratio = *report.sup / *length;
            report.within_length = *report.sup <= *length * (1.0 + kDecaySlack);
        } else {
            report.within_length = true;
        }
    }
    return report;
}

template <RealScalar S>
LengthEstimate length_estimate(const Path<S>& path, NormKind kind, std::size_t depth) {
    const auto sig = signature(path, depth);
    LengthEstimate est;
    est.length = path_length(path, kind);
    est.report = analyze(sig, kind, est.length);
    est.sup = est.report.sup;
    est.ratio = est.report.ratio;
    est.trivial = !est.sup.has_value();
    est.within_bound = est.report.within_length.value_or(true);
    if constexpr (is_exact_v<S>) {
        if (kind == NormKind::L1Projective) {
            const Rational exact_length = path_length_l1_exact(path);
            bool saturated = true;
            Rational fact(1);
            Rational lpow(1);
            for (std::size_t n = 1; n <= depth && saturated; ++n) {
                fact *= static_cast<unsigned long>(n);
                lpow *= exact_length;
                saturated = fact * level_l1_exact(sig.level(n)) == lpow;
            }
            est.saturated = saturated;
        }
    }
    return est;
}

template AsymptoticsReport analyze(const Tensor<Rational>&, NormKind, std::optional<double>);
template AsymptoticsReport analyze(const Tensor<double>&, NormKind, std::optional<double>);
template AsymptoticsReport analyze(const Tensor<Complex>&, NormKind, std::optional<double>);
template LengthEstimate length_estimate(const Path<Rational>&, NormKind, std::size_t);
template LengthEstimate length_estimate(const Path<double>&, NormKind, std::size_t);

}  // namespace sigalg
