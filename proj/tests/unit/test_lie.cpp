#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sigalg/errors.hpp"
#include "sigalg/lie.hpp"
#include "sigalg/random.hpp"

using namespace sigalg;

namespace {

std::vector<Rational> dense(std::size_t d, std::size_t k, const std::vector<std::pair<std::vector<std::size_t>, long>>& terms) {
    std::vector<Rational> out(oracle::ipow(d, k));
    for (const auto& [word, c] : terms) out[oracle::encode(word, d)] += c;
    return out;
}

std::size_t error_column(std::string_view expr, std::size_t d) {
    try {
        lie_generator(expr, d);
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        return e.column();
    }
    ADD_FAILURE() << "no ParseError for " << expr;
    return 0;
}

LieElement random_element(Rng& rng, std::size_t d) {
    LieElement x = lie_letter(static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(d))), d);
    return rng.rational(4, 3) * x;
}

}  // namespace

TEST(Lie, BracketOfLetters) {
    const auto b = lie_bracket(lie_letter(1, 2), lie_letter(2, 2));
    EXPECT_EQ(b.degree, 2u);
    EXPECT_EQ(b.coefficients, dense(2, 2, {{{0, 1}, 1}, {{1, 0}, -1}}));
    EXPECT_TRUE(lie_bracket(lie_letter(1, 2), lie_letter(1, 2)).is_zero());
}

TEST(Lie, NestedBracket) {
    const auto b = lie_generator("[1,[1,2]]", 2);
    EXPECT_EQ(b.degree, 3u);
    EXPECT_EQ(b.coefficients, dense(2, 3, {{{0, 0, 1}, 1}, {{0, 1, 0}, -2}, {{1, 0, 0}, 1}}));
}

TEST(Lie, AntisymmetryAndJacobi) {
    Rng rng(70);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_element(rng, 3), y = random_element(rng, 3), z = random_element(rng, 3);
        EXPECT_TRUE((lie_bracket(x, y) + lie_bracket(y, x)).is_zero());
        const auto jacobi =
            lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
        EXPECT_TRUE(jacobi.is_zero());
    }
    const auto x = lie_generator("[1,2]", 3), y = lie_generator("3", 3), z = lie_generator("[2,3]", 3);
    const auto jacobi =
        lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    EXPECT_TRUE(jacobi.is_zero());
}

TEST(Lie, BracketCoefficientsSumToZero) {
    for (const char* expr : {"[1,2]", "[1,[1,2]]", "[[1,2],[1,3]]", "[2,[3,[1,2]]]"}) {
        const auto x = lie_generator(expr, 3);
        Rational sum = 0;
        for (const auto& c : x.coefficients) sum += c;
        EXPECT_EQ(sum, 0) << expr;
    }
}

TEST(LieParser, ScalarsAndSigns) {
    const auto a = lie_generator("1/2*[1,2] - [1,2]", 2);
    EXPECT_EQ(a, Rational(-1, 2) * lie_generator("[1,2]", 2));
    EXPECT_EQ(lie_generator("-[1,2]", 2), lie_generator("[2,1]", 2));
    EXPECT_EQ(lie_generator(" 3 * e1 + 2 ", 2).coefficients, (std::vector<Rational>{3, 1}));
    EXPECT_EQ(lie_generator("(1 + 2)", 2), lie_letter(1, 2) + lie_letter(2, 2));
    EXPECT_EQ(lie_generator("[e1,E2]", 2), lie_generator("[1,2]", 2));
}

TEST(LieParser, ErrorColumns) {
    EXPECT_EQ(error_column("[1,2", 2), 5u);
    EXPECT_EQ(error_column("[1,3]", 2), 4u);
    EXPECT_EQ(error_column("[1,2] + 1", 2), 7u);
    EXPECT_EQ(error_column("[1,2]]", 2), 6u);
    EXPECT_EQ(error_column("[0,1]", 2), 2u);
    EXPECT_EQ(error_column("", 2), 1u);
    EXPECT_EQ(error_column("[1,x]", 2), 4u);
    EXPECT_EQ(error_column("1/2 + 1", 2), 5u);
}

TEST(LieParser, DimensionZeroRejected) { EXPECT_THROW(lie_generator("1", 0), InvalidArgument); }

TEST(Lie, ArithmeticGuards) {
    EXPECT_THROW(lie_letter(1, 2) + lie_generator("[1,2]", 2), InvalidArgument);
    EXPECT_THROW(lie_letter(1, 2) + lie_letter(1, 3), ShapeMismatch);
    EXPECT_THROW(lie_letter(3, 2), InvalidArgument);
    EXPECT_THROW(lie_generator("[1,[1,2]]", 2).embed(2), InvalidArgument);
}

TEST(Lie, EmbedPlacesSingleLevel) {
    const auto t = lie_generator("[1,2]", 2).embed(4);
    EXPECT_EQ(t.constant(), 0);
    for (std::size_t k : {1u, 3u, 4u})
        for (const auto& c : t.level(k)) EXPECT_EQ(c, 0);
    EXPECT_EQ(std::vector<Rational>(t.level(2).begin(), t.level(2).end()), (std::vector<Rational>{0, 1, -1, 0}));
}
