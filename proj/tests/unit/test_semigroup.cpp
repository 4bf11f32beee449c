#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "sigalg/errors.hpp"
#include "sigalg/lie.hpp"
#include "sigalg/random.hpp"
#include "sigalg/semigroup.hpp"
#include "sigalg/signature.hpp"

using namespace sigalg;

namespace {

using Set = std::vector<std::uint64_t>;

Set brute_semigroup(const Set& gens, std::uint64_t bound) {
    Set out;
    for (std::uint64_t x = 1; x <= bound; ++x)
        if (oracle::representable(x, gens)) out.push_back(x);
    return out;
}

}  // namespace

TEST(ExtractPattern, ExpOfVectorIsFull) {
    const auto g = exp_of_vector<Rational>(std::vector<Rational>{Rational(1, 3), 0}, 5);
    const auto p = extract_pattern(g, 0.0);
    EXPECT_EQ(p.nonzero, (Set{1, 2, 3, 4, 5}));
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.depth, 5u);
}

TEST(ExtractPattern, UnitIsTrivial) {
    const auto p = extract_pattern(Tensor<Rational>::unit(2, 5), 0.0);
    EXPECT_TRUE(p.trivial());
    EXPECT_TRUE(p.nonzero.empty());
}

TEST(ExtractPattern, AreaElementHasEvenDegrees) {
    const auto g = tensor_exp(lie_generator("[1,2]", 2).embed(6));
    EXPECT_EQ(extract_pattern(g, 0.0).nonzero, (Set{2, 4, 6}));
}

TEST(ExtractPattern, FloatThreshold) {
    Tensor<double> g = Tensor<double>::unit(1, 3);
    g.level(1)[0] = 1e-13;
    g.level(2)[0] = 1e-11;
    const auto p = extract_pattern(g, 1e-12);
    EXPECT_EQ(p.nonzero, (Set{2}));
    EXPECT_FALSE(p.exact);
    EXPECT_THROW(extract_pattern(Tensor<Rational>::unit(1, 2), 1e-12), InvalidArgument);
    EXPECT_THROW(extract_pattern(g, -1.0), InvalidArgument);
}

TEST(MinModulus, SixTenGivesTwo) {
    const auto a = semigroup_elements(Set{6, 10}, 60);
    EXPECT_EQ(a, brute_semigroup({6, 10}, 60));
    for (auto x : a) EXPECT_EQ(x % 2, 0u);
    const auto g = std::accumulate(a.begin(), a.end(), std::uint64_t{0},
                                   [](std::uint64_t x, std::uint64_t y) { return std::gcd(x, y); });
    EXPECT_EQ(g, 2u);
    EXPECT_EQ(min_modulus(a), std::optional<std::uint64_t>(2));
}

TEST(MinModulus, ThreeFiveHasNone) {
    const auto a = semigroup_elements(Set{3, 5}, 60);
    EXPECT_EQ(a, brute_semigroup({3, 5}, 60));
    EXPECT_FALSE(min_modulus(a).has_value());
    Set complement;
    for (std::uint64_t x = 1; x <= 60; ++x)
        if (!std::binary_search(a.begin(), a.end(), x)) complement.push_back(x);
    EXPECT_EQ(complement, (Set{1, 2, 4, 7}));
}

TEST(MinModulus, MultiplesOfSeven) {
    const auto a = semigroup_elements(Set{7}, 70);
    EXPECT_EQ(a, (Set{7, 14, 21, 28, 35, 42, 49, 56, 63, 70}));
    EXPECT_EQ(min_modulus(a), std::optional<std::uint64_t>(7));
}

TEST(MinModulus, DivisibilityHoldsOnRandomSets) {
    Rng rng(40);
    for (int trial = 0; trial < 50; ++trial) {
        Set gens;
        const auto factor = static_cast<std::uint64_t>(rng.between(1, 6));
        for (int i = 0; i < 3; ++i) gens.push_back(factor * static_cast<std::uint64_t>(rng.between(1, 9)));
        const auto a = semigroup_elements(gens, 80);
        if (const auto d = min_modulus(a)) {
            EXPECT_GE(*d, 2u);
            for (auto x : a) EXPECT_EQ(x % *d, 0u);
        }
    }
}

TEST(MinModulus, Errors) {
    EXPECT_THROW(min_modulus(Set{}), InvalidArgument);
    EXPECT_THROW(min_modulus(Set{0, 4}), InvalidArgument);
}

TEST(Frobenius, MatchesBruteForce) {
    EXPECT_EQ(frobenius_number(Set{3, 5}), 7u);
    EXPECT_EQ(oracle::brute_frobenius({3, 5}, 15), 7u);
    EXPECT_EQ(frobenius_number(Set{2, 3}), 1u);
    EXPECT_EQ(oracle::brute_frobenius({2, 3}, 6), 1u);
    EXPECT_EQ(frobenius_number(Set{5, 7}), 23u);
    EXPECT_EQ(frobenius_number(Set{5, 7}), 5u * 7 - 5 - 7);
    EXPECT_EQ(oracle::brute_frobenius({5, 7}, 35), 23u);
}

TEST(Frobenius, RandomGeneratorSets) {
    Rng rng(41);
    int checked = 0;
    while (checked < 30) {
        Set gens;
        const auto count = rng.between(2, 3);
        for (int i = 0; i < count; ++i) gens.push_back(static_cast<std::uint64_t>(rng.between(2, 13)));
        const auto g = std::accumulate(gens.begin(), gens.end(), std::uint64_t{0},
                                       [](std::uint64_t x, std::uint64_t y) { return std::gcd(x, y); });
        if (g != 1) continue;
        ++checked;
        const auto lo = *std::min_element(gens.begin(), gens.end());
        const auto hi = *std::max_element(gens.begin(), gens.end());
        const auto f = frobenius_number(gens);
        EXPECT_EQ(f, oracle::brute_frobenius(gens, lo * hi));
        EXPECT_FALSE(oracle::representable(f, gens));
        for (auto x = f + 1; x <= f + lo; ++x) EXPECT_TRUE(oracle::representable(x, gens));
    }
}

TEST(Frobenius, Errors) {
    EXPECT_THROW(frobenius_number(Set{4, 6}), InvalidArgument);
    EXPECT_THROW(frobenius_number(Set{1, 6}), InvalidArgument);
    EXPECT_THROW(frobenius_number(Set{}), InvalidArgument);
    EXPECT_THROW(frobenius_number(Set{1009, 1013}), InvalidArgument);
}

TEST(VerifyAdditive, EvenNumbers) {
    Set evens;
    for (std::uint64_t x = 2; x <= 20; x += 2) evens.push_back(x);
    EXPECT_TRUE(verify_additive(evens, 20).closed);
}

TEST(VerifyAdditive, SmallestCounterexample) {
    const auto r = verify_additive(Set{2, 3}, 6);
    EXPECT_FALSE(r.closed);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->sum, 4u);
    EXPECT_EQ(r.counterexample->i, 2u);
    EXPECT_EQ(r.counterexample->j, 2u);
}

TEST(VerifyAdditive, SumsBeyondBoundIgnored) {
    EXPECT_TRUE(verify_additive(Set{4, 5}, 7).closed);
    EXPECT_TRUE(verify_additive(Set{}, 10).closed);
}

TEST(VerifyAdditive, SignaturePatternsAreClosed) {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const auto path = random_rational_path(rng, 2, static_cast<std::size_t>(rng.between(1, 4)));
        const auto p = extract_pattern(signature(path, 8), 0.0);
        EXPECT_TRUE(verify_additive(p.nonzero, 8).closed);
    }
    for (const char* expr : {"[1,2]", "[1,[1,2]]", "[[1,2],[1,[1,2]]]"}) {
        const auto p = extract_pattern(tensor_exp(lie_generator(expr, 2).embed(10)), 0.0);
        EXPECT_TRUE(verify_additive(p.nonzero, 10).closed) << expr;
    }
}
