#include <gtest/gtest.h>

#include <cmath>

#include "sigalg/asymptotics.hpp"
#include "sigalg/errors.hpp"
#include "sigalg/lie.hpp"
#include "sigalg/random.hpp"
#include "sigalg/signature.hpp"

using namespace sigalg;

namespace {

const Path<Rational> kStaircase({{0, 0}, {1, 0}, {1, 1}});

// S_12 of the L-shaped path under the Hilbert-Schmidt norm, frozen from a build-time run
constexpr double kLShapeS12 = 1.8535372680953086;

double central_binomial(unsigned n) {
    double c = 1.0;
    for (unsigned i = 1; i <= n; ++i) c = c * static_cast<double>(n + i) / static_cast<double>(i);
    return c;
}

}  // namespace

TEST(Analyze, ExpOfVectorHasConstantRoots) {
    const std::vector<Rational> v{Rational(3, 4), Rational(-1, 2)};
    const auto g = exp_of_vector<Rational>(v, 7);
    const auto r1 = analyze(g, NormKind::L1Projective, 1.25);
    for (const auto& t : r1.terms) EXPECT_DOUBLE_EQ(*t.a, 1.25);
    EXPECT_EQ(r1.sup, std::optional<double>(1.25));
    EXPECT_EQ(r1.ratio, std::optional<double>(1.0));

    const auto gf = exp_of_vector<double>(std::vector<double>{0.6, 0.8}, 7);
    const auto r2 = analyze(gf, NormKind::L2HilbertSchmidt, 1.0);
    for (const auto& t : r2.terms) EXPECT_NEAR(*t.a, 1.0, 1e-14);
    EXPECT_TRUE(r2.violations.empty());
}

TEST(Analyze, StaircaseRootsAreExactlyTwo) {
    const auto g = signature(kStaircase, 8);
    const auto r = analyze(g, NormKind::L1Projective);
    ASSERT_EQ(r.terms.size(), 8u);
    double power = 1.0;
    for (const auto& t : r.terms) {
        power *= 2.0;
        EXPECT_EQ(t.b_exact, std::optional<std::string>(std::to_string(static_cast<long>(power)) + "/1"));
        EXPECT_EQ(t.a, std::optional<double>(2.0));
    }
    EXPECT_EQ(r.sup, std::optional<double>(2.0));
}

TEST(Analyze, AreaElementOnlyEvenDegrees) {
    const auto g = tensor_exp(lie_generator("[1,2]", 2).embed(8));
    const auto r = analyze(g, NormKind::L1Projective);
    EXPECT_EQ(r.nonzero_degrees, (std::vector<std::uint64_t>{2, 4, 6, 8}));
    for (const auto& t : r.terms) EXPECT_EQ(t.a.has_value(), t.degree % 2 == 0) << t.degree;
    EXPECT_TRUE(r.violations.empty());
    EXPECT_FALSE(r.length.has_value());
}

TEST(Analyze, RunningSupremumIsNondecreasing) {
    Rng rng(50);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = signature(to_f64(random_rational_path(rng, 3, 5)), 8);
        for (NormKind kind : {NormKind::L1Projective, NormKind::L2HilbertSchmidt}) {
            const auto r = analyze(g, kind);
            double previous = 0.0;
            for (const auto& t : r.terms) {
                ASSERT_TRUE(t.running_sup.has_value());
                EXPECT_GE(*t.running_sup, previous);
                previous = *t.running_sup;
            }
        }
    }
}

TEST(Analyze, SupermultiplicativeOnGroupLike) {
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = signature(random_rational_path(rng, 2, 4), 10);
        for (NormKind kind : {NormKind::L1Projective, NormKind::L2HilbertSchmidt})
            EXPECT_TRUE(analyze(g, kind).violations.empty());
    }
}

TEST(Analyze, ViolationsFlaggedForNonGroupLike) {
    // level 2 too small to dominate level 1 squared
    Tensor<double> g = Tensor<double>::unit(1, 2);
    g.level(1)[0] = 1.0;
    g.level(2)[0] = 0.1;
    const auto r = analyze(g, NormKind::L1Projective);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].i, 1u);
    EXPECT_EQ(r.violations[0].j, 1u);
}

TEST(Analyze, RequiresUnitConstant) {
    EXPECT_THROW(analyze(Tensor<double>(2, 3), NormKind::L1Projective), InvalidArgument);
}

TEST(LengthEstimate, SingleSegmentRatioOne) {
    const Path<Rational> seg({{0, 0, 0}, {Rational(1, 2), Rational(-1, 3), 2}});
    for (std::size_t n : {1u, 4u, 8u}) {
        const auto est = length_estimate(seg, NormKind::L1Projective, n);
        EXPECT_EQ(est.ratio, std::optional<double>(1.0));
        EXPECT_EQ(est.saturated, std::optional<bool>(true));
    }
    const auto l2 = length_estimate(to_f64(seg), NormKind::L2HilbertSchmidt, 6);
    EXPECT_NEAR(*l2.ratio, 1.0, 1e-14);
}

TEST(LengthEstimate, OutAndBackIsTrivial) {
    const Path<Rational> p({{0, 0}, {1, 2}, {0, 0}});
    const auto est = length_estimate(p, NormKind::L1Projective, 6);
    EXPECT_TRUE(est.trivial);
    EXPECT_FALSE(est.sup.has_value());
    EXPECT_TRUE(est.within_bound);
    EXPECT_EQ(est.saturated, std::optional<bool>(false));
}

TEST(LengthEstimate, StaircaseSaturatesExactly) {
    const auto est = length_estimate(kStaircase, NormKind::L1Projective, 8);
    EXPECT_EQ(est.sup, std::optional<double>(2.0));
    EXPECT_EQ(est.length, 2.0);
    EXPECT_EQ(est.saturated, std::optional<bool>(true));
    const Path<Rational> monotone({{0, 0, 0}, {1, 0, 0}, {1, 2, 0}, {3, 2, 1}, {3, 5, 1}});
    EXPECT_EQ(length_estimate(monotone, NormKind::L1Projective, 8).saturated, std::optional<bool>(true));
}

TEST(LengthEstimate, NonMonotonePathIsNotSaturated) {
    const Path<Rational> p({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto est = length_estimate(p, NormKind::L1Projective, 6);
    EXPECT_EQ(est.saturated, std::optional<bool>(false));
    EXPECT_LT(*est.sup, 3.0);
}

TEST(LengthEstimate, LShapeHilbertSchmidtRegression) {
    const auto est = length_estimate(kStaircase, NormKind::L2HilbertSchmidt, 12);
    ASSERT_TRUE(est.sup.has_value());
    EXPECT_LE(*est.sup, 2.0);
    EXPECT_GE(*est.sup, *est.report.terms[1].running_sup);
    EXPECT_NEAR(*est.sup, kLShapeS12, 4e-16);
    // (n!)^2 sum_w g_n(w)^2 over the words 1^a 2^b equals C(2n, n)
    for (const auto& t : est.report.terms) {
        const auto n = static_cast<unsigned>(t.degree);
        EXPECT_EQ(t.b_exact, std::optional<std::string>(std::to_string(static_cast<long>(central_binomial(n))) + "/1"));
        EXPECT_NEAR(*t.a, std::pow(central_binomial(n), 1.0 / (2.0 * n)), 1e-15);
    }
}

TEST(LengthEstimate, DecayBoundOnRandomPaths) {
    Rng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = static_cast<std::size_t>(rng.between(1, 3));
        const auto p = to_f64(random_rational_path(rng, d, static_cast<std::size_t>(rng.between(1, 5))));
        for (NormKind kind : {NormKind::L1Projective, NormKind::L2HilbertSchmidt}) {
            const auto est = length_estimate(p, kind, 10);
            EXPECT_TRUE(est.within_bound);
            EXPECT_LE(*est.sup, est.length * (1 + kDecaySlack));
        }
    }
}

TEST(ExactAwareRoot, SnapsToExactRoots) {
    EXPECT_EQ(exact_aware_root(Rational(256), 8), 2.0);
    EXPECT_EQ(exact_aware_root(Rational(1, 1024), 10), 0.5);
    EXPECT_EQ(exact_aware_root(Rational(243, 32), 5), 1.5);
    EXPECT_NEAR(exact_aware_root(Rational(2), 2), std::sqrt(2.0), 1e-16);
    EXPECT_THROW(exact_aware_root(Rational(0), 3), InvalidArgument);
}
