#include <gtest/gtest.h>

#include "sigalg/errors.hpp"
#include "sigalg/io.hpp"
#include "sigalg/lie.hpp"
#include "sigalg/random.hpp"
#include "sigalg/signature.hpp"

using namespace sigalg;

namespace {

std::pair<std::size_t, std::size_t> parse_error_at(std::string_view text) {
    try {
        parse_json(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    ADD_FAILURE() << "no ParseError";
    return {0, 0};
}

std::pair<std::size_t, std::size_t> csv_error_at(std::string_view text) {
    try {
        path_from_csv(text, ScalarKind::Rational);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    ADD_FAILURE() << "no ParseError";
    return {0, 0};
}

}  // namespace

TEST(TensorJson, RationalRoundTripIsByteStable) {
    Rng rng(80);
    const auto g = signature(random_rational_path(rng, 2, 3), 4);
    const std::string text = dump(to_json(g));
    const auto back = tensor_from_json(parse_json(text));
    ASSERT_TRUE(std::holds_alternative<Tensor<Rational>>(back));
    EXPECT_EQ(std::get<Tensor<Rational>>(back), g);
    EXPECT_EQ(dump(to_json(back)), text);
    EXPECT_EQ(text.back(), '\n');
}

TEST(TensorJson, RationalsSerializeAsFractions) {
    const auto g = exp_of_vector<Rational>(std::vector<Rational>{1}, 4);
    const auto doc = to_json(g);
    EXPECT_EQ(doc["scalar"], "rational");
    EXPECT_EQ(doc["levels"][0]["coefficients"][0], "1/1");
    EXPECT_EQ(doc["levels"][4]["coefficients"][0], "1/24");
}

TEST(TensorJson, FloatAndComplexRoundTrip) {
    Rng rng(81);
    const auto x = random_real_tensor(rng, 2, 3, 1.0);
    EXPECT_EQ(std::get<Tensor<double>>(tensor_from_json(parse_json(dump(to_json(x))))), x);
    const auto z = random_complex_tensor(rng, 2, 2, Complex(1, 0));
    const auto doc = to_json(z);
    EXPECT_EQ(doc["levels"][1]["coefficients"][0].size(), 2u);
    EXPECT_EQ(std::get<Tensor<Complex>>(tensor_from_json(parse_json(dump(doc)))), z);
}

TEST(TensorJson, MissingLevelsAreZero) {
    const auto doc = parse_json(R"({"dimension": 2, "depth": 2, "scalar": "rational",
        "levels": [{"degree": 0, "coefficients": ["1"]}, {"degree": 2, "coefficients": [0, "1/2", "-1/2", 0]}]})");
    const auto t = std::get<Tensor<Rational>>(tensor_from_json(doc));
    EXPECT_EQ(t, scale(lie_generator("[1,2]", 2).embed(2), Rational(1, 2)) + Tensor<Rational>::unit(2, 2));
}

TEST(TensorJson, SchemaErrors) {
    const char* bad[] = {
        R"({"depth": 1, "scalar": "f64", "levels": []})",
        R"({"dimension": 0, "depth": 1, "scalar": "f64", "levels": []})",
        R"({"dimension": 1, "depth": 1, "scalar": "f32", "levels": []})",
        R"({"dimension": 1, "depth": 1, "scalar": "f64", "levels": [{"degree": 2, "coefficients": [1]}]})",
        R"({"dimension": 1, "depth": 1, "scalar": "f64", "levels": [{"degree": 1, "coefficients": [1, 2]}]})",
        R"({"dimension": 1, "depth": 1, "scalar": "f64",
            "levels": [{"degree": 1, "coefficients": [1]}, {"degree": 1, "coefficients": [1]}]})",
        R"({"dimension": 1, "depth": 1, "scalar": "rational", "levels": [{"degree": 1, "coefficients": ["x"]}]})",
        R"({"dimension": 1, "depth": 1, "scalar": "c64", "levels": [{"degree": 1, "coefficients": [1]}]})",
    };
    for (const char* text : bad) EXPECT_THROW(tensor_from_json(parse_json(text)), ParseError) << text;
}

TEST(PathJson, RoundTripAndDecimals) {
    const auto doc = parse_json(R"({"dimension": 2, "points": [[0, 0], [0.1, "1/3"], [2, -1]]})");
    EXPECT_FALSE(is_tensor_document(doc));
    const auto p = std::get<Path<Rational>>(path_from_json(doc, ScalarKind::Rational));
    EXPECT_EQ(p.vertex(1)[0], Rational(1, 10));
    EXPECT_EQ(p.vertex(1)[1], Rational(1, 3));
    const auto again = std::get<Path<Rational>>(path_from_json(parse_json(dump(to_json(p))), ScalarKind::Rational));
    EXPECT_EQ(again, p);
    const auto f = std::get<Path<double>>(path_from_json(doc, ScalarKind::F64));
    EXPECT_EQ(f.vertex(1)[1], 1.0 / 3.0);
    EXPECT_THROW(path_from_json(doc, ScalarKind::C64), InvalidArgument);
}

TEST(PathJson, RaggedAndEmpty) {
    EXPECT_THROW(path_from_json(parse_json(R"({"dimension": 2, "points": [[0, 0], [1, 0, 2]]})"), ScalarKind::Rational),
                 ShapeMismatch);
    EXPECT_THROW(path_from_json(parse_json(R"({"dimension": 2, "points": []})"), ScalarKind::Rational), ParseError);
    EXPECT_THROW(path_from_json(parse_json(R"({"points": [[0]]})"), ScalarKind::Rational), ParseError);
}

TEST(ParseJson, ErrorLineAndColumn) {
    EXPECT_EQ(parse_error_at("{\"a\": 1,\n  \"b\": ]}"), std::make_pair(std::size_t{2}, std::size_t{8}));
    EXPECT_EQ(parse_error_at("[1, 2"), std::make_pair(std::size_t{1}, std::size_t{6}));
    EXPECT_EQ(parse_error_at("x"), std::make_pair(std::size_t{1}, std::size_t{1}));
}

TEST(PathCsv, CommentsBlankLinesAndRationals) {
    const auto p = std::get<Path<Rational>>(path_from_csv("# header\n0,0\n\n1/2, 0.25\r\n  # note\n1,1", ScalarKind::Rational));
    EXPECT_EQ(p.vertex_count(), 3u);
    EXPECT_EQ(std::vector<Rational>(p.vertex(1).begin(), p.vertex(1).end()), (std::vector<Rational>{Rational(1, 2), Rational(1, 4)}));
    const auto f = std::get<Path<double>>(path_from_csv("0\n0.5\n", ScalarKind::F64));
    EXPECT_EQ(f.vertex(1)[0], 0.5);
}

TEST(PathCsv, ErrorPositions) {
    EXPECT_EQ(csv_error_at("0,0\n1,x\n"), std::make_pair(std::size_t{2}, std::size_t{3}));
    EXPECT_EQ(csv_error_at("0,0\n# c\n1,2,3\n"), std::make_pair(std::size_t{3}, std::size_t{1}));
    EXPECT_EQ(csv_error_at("0,,1\n"), std::make_pair(std::size_t{1}, std::size_t{3}));
    EXPECT_EQ(csv_error_at("# only comments\n"), std::make_pair(std::size_t{2}, std::size_t{1}));
}

TEST(Reports, ModulusReportShapes) {
    DegreePattern even{8, {2, 4, 6, 8}, true};
    const auto r = modulus_report(even);
    EXPECT_EQ(r["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(r["min_modulus"], 2);
    EXPECT_EQ(r["additive"]["closed"], true);
    EXPECT_TRUE(r["frobenius"].is_null());

    DegreePattern trivial{5, {}, true};
    EXPECT_EQ(modulus_report(trivial)["note"], "signature trivial to depth 5");

    DegreePattern full{4, {1, 2, 3, 4}, true};
    EXPECT_TRUE(modulus_report(full)["min_modulus"].is_null());

    DegreePattern gaps{10, {3, 5, 6, 8, 9, 10}, true};
    const auto g = modulus_report(gaps);
    EXPECT_EQ(g["frobenius"], 7);
    EXPECT_EQ(g["additive"]["closed"], true);

    DegreePattern open{6, {2, 3}, true};
    const auto o = modulus_report(open);
    EXPECT_EQ(o["additive"]["closed"], false);
    EXPECT_EQ(o["additive"]["counterexample"]["sum"], 4);
}

TEST(Reports, AsymptoticsKeysFollowNorm) {
    const Path<Rational> stair({{0, 0}, {1, 0}, {1, 1}});
    const auto l1 = to_json(length_estimate(stair, NormKind::L1Projective, 3).report);
    EXPECT_EQ(l1["norm"], "l1proj");
    EXPECT_EQ(l1["terms"][2]["b_exact"], "8/1");
    const auto l2 = to_json(length_estimate(stair, NormKind::L2HilbertSchmidt, 3).report);
    EXPECT_EQ(l2["terms"][2]["b_squared_exact"], "20/1");
    EXPECT_FALSE(l2["terms"][2].contains("b_exact"));
}
