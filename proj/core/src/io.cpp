#include "sigalg/io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sigalg/errors.hpp"

namespace sigalg {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what, 0, 0);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const Json& field(const Json& object, const char* key, const std::string& where) {
    if (!object.is_object()) schema_error(where, "expected an object");
    auto it = object.find(key);
    if (it == object.end()) schema_error(where, std::string("missing \"") + key + "\"");
    return *it;
}

std::size_t positive_integer(const Json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 1) schema_error(where, "expected a positive integer");
    return value.get<std::size_t>();
}

Rational rational_from_json(const Json& value, const std::string& where) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer()) {
            if (value.is_number_unsigned()) return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
            return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
        }
        if (value.is_number_float()) return rational_from_double(value.get<double>());
    } catch (const ParseError& e) {
        schema_error(where, e.what());
    } catch (const InvalidArgument& e) {
        schema_error(where, e.what());
    }
    schema_error(where, "expected a number or rational string");
}

double double_from_json(const Json& value, const std::string& where) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) return to_double(rational_from_json(value, where));
    schema_error(where, "expected a number");
}

template <Scalar S>
Json coefficient_to_json(const S& c) {
    if constexpr (std::is_same_v<S, Rational>) return to_string(c);
    else if constexpr (std::is_same_v<S, Complex>) return Json::array({c.real(), c.imag()});
    else return c;
}

template <Scalar S>
S coefficient_from_json(const Json& value, const std::string& where) {
    if constexpr (std::is_same_v<S, Rational>) {
        return rational_from_json(value, where);
    } else if constexpr (std::is_same_v<S, Complex>) {
        if (!value.is_array() || value.size() != 2) schema_error(where, "expected an [re, im] pair");
        return Complex(double_from_json(value[0], where + "[0]"), double_from_json(value[1], where + "[1]"));
    } else {
        return double_from_json(value, where);
    }
}

template <Scalar S>
Tensor<S> tensor_body_from_json(const Json& doc, std::size_t dimension, std::size_t depth) {
    Tensor<S> tensor(dimension, depth);
    const Json& levels = field(doc, "levels", "tensor");
    if (!levels.is_array()) schema_error("tensor.levels", "expected an array");
    std::vector<bool> seen(depth + 1, false);
    for (std::size_t l = 0; l < levels.size(); ++l) {
        const std::string where = "levels[" + std::to_string(l) + "]";
        const Json& entry = levels[l];
        const Json& degree_json = field(entry, "degree", where);
        if (!degree_json.is_number_integer() || degree_json.get<std::int64_t>() < 0)
            schema_error(where + ".degree", "expected a nonnegative integer");
        const auto degree = degree_json.get<std::size_t>();
        if (degree > depth) schema_error(where + ".degree", "exceeds depth " + std::to_string(depth));
        if (seen[degree]) schema_error(where + ".degree", "duplicate degree " + std::to_string(degree));
        seen[degree] = true;
        const Json& coeffs = field(entry, "coefficients", where);
        auto dst = tensor.level(degree);
        if (!coeffs.is_array() || coeffs.size() != dst.size())
            schema_error(where + ".coefficients", "expected " + std::to_string(dst.size()) + " coefficients");
        for (std::size_t i = 0; i < dst.size(); ++i)
            dst[i] = coefficient_from_json<S>(coeffs[i], where + ".coefficients[" + std::to_string(i) + "]");
    }
    return tensor;
}

Json additivity_json(const AdditivityResult& result, std::uint64_t bound) {
    Json out;
    out["bound"] = bound;
    out["closed"] = result.closed;
    if (result.counterexample) {
        out["counterexample"] = {{"i", result.counterexample->i},
                                 {"j", result.counterexample->j},
                                 {"sum", result.counterexample->sum}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = line_column(text, offset);
        std::string message = e.what();
        if (auto pos = message.find("; "); pos != std::string::npos) message = message.substr(pos + 2);
        throw ParseError("invalid JSON: " + message, line, column);
    }
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

template <Scalar S>
Json to_json(const Tensor<S>& tensor) {
    Json doc;
    doc["dimension"] = tensor.dimension();
    doc["depth"] = tensor.depth();
    doc["scalar"] = std::string(to_string(scalar_kind_of<S>()));
    Json levels = Json::array();
    for (std::size_t k = 0; k <= tensor.depth(); ++k) {
        Json coeffs = Json::array();
        for (const auto& c : tensor.level(k)) coeffs.push_back(coefficient_to_json(c));
        levels.push_back({{"degree", k}, {"coefficients", std::move(coeffs)}});
    }
    doc["levels"] = std::move(levels);
    return doc;
}

Json to_json(const AnyTensor& tensor) {
    return std::visit([](const auto& t) { return to_json(t); }, tensor);
}

bool is_tensor_document(const Json& document) { return document.is_object() && document.contains("levels"); }

AnyTensor tensor_from_json(const Json& document) {
    const auto dimension = positive_integer(field(document, "dimension", "tensor"), "tensor.dimension");
    const auto depth = positive_integer(field(document, "depth", "tensor"), "tensor.depth");
    const Json& scalar_json = field(document, "scalar", "tensor");
    if (!scalar_json.is_string()) schema_error("tensor.scalar", "expected a string");
    ScalarKind kind;
    try {
        kind = parse_scalar_kind(scalar_json.get<std::string>());
    } catch (const InvalidArgument& e) {
        schema_error("tensor.scalar", e.what());
    }
    switch (kind) {
        case ScalarKind::Rational: return tensor_body_from_json<Rational>(document, dimension, depth);
        case ScalarKind::F64: return tensor_body_from_json<double>(document, dimension, depth);
        case ScalarKind::C64: return tensor_body_from_json<Complex>(document, dimension, depth);
    }
    schema_error("tensor.scalar", "unsupported");
}

template <RealScalar S>
Json to_json(const Path<S>& path) {
    Json doc;
    doc["dimension"] = path.dimension();
    Json points = Json::array();
    for (std::size_t v = 0; v < path.vertex_count(); ++v) {
        Json point = Json::array();
        for (const auto& c : path.vertex(v)) point.push_back(coefficient_to_json(c));
        points.push_back(std::move(point));
    }
    doc["points"] = std::move(points);
    return doc;
}

AnyPath path_from_json(const Json& document, ScalarKind mode) {
    if (mode == ScalarKind::C64) throw InvalidArgument("paths are real; use rational or f64");
    const auto dimension = positive_integer(field(document, "dimension", "path"), "path.dimension");
    const Json& points = field(document, "points", "path");
    if (!points.is_array() || points.empty()) schema_error("path.points", "expected a nonempty array of vertices");
    auto read = [&]<class S>(std::type_identity<S>) -> AnyPath {
        std::vector<S> coords;
        coords.reserve(points.size() * dimension);
        for (std::size_t v = 0; v < points.size(); ++v) {
            const std::string where = "points[" + std::to_string(v) + "]";
            const Json& point = points[v];
            if (!point.is_array()) schema_error(where, "expected an array of coordinates");
            if (point.size() != dimension)
                throw ShapeMismatch(where + ": dimension mismatch, vertex has " + std::to_string(point.size()) +
                                    " coordinates but dimension is " + std::to_string(dimension));
            for (std::size_t i = 0; i < dimension; ++i) {
                const std::string at = where + "[" + std::to_string(i) + "]";
                if constexpr (std::is_same_v<S, Rational>) coords.push_back(rational_from_json(point[i], at));
                else coords.push_back(double_from_json(point[i], at));
            }
        }
        return Path<S>(dimension, std::move(coords));
    };
    if (mode == ScalarKind::Rational) return read(std::type_identity<Rational>{});
    return read(std::type_identity<double>{});
}

AnyPath path_from_csv(std::string_view text, ScalarKind mode) {
    if (mode == ScalarKind::C64) throw InvalidArgument("paths are real; use rational or f64");
    std::vector<Rational> exact;
    std::vector<double> approx;
    std::size_t dimension = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            if (end == text.size()) break;
            continue;
        }
        std::size_t count = 0;
        std::size_t field_start = 0;
        while (true) {
            std::size_t comma = line.find(',', field_start);
            std::string_view token = line.substr(field_start, comma == std::string_view::npos ? std::string_view::npos
                                                                                             : comma - field_start);
            const std::size_t column = field_start + 1;
            try {
                Rational value = parse_rational(token);
                if (mode == ScalarKind::Rational) exact.push_back(std::move(value));
                else approx.push_back(to_double(value));
            } catch (const Error&) {
                throw ParseError("malformed coordinate '" + std::string(token) + "'", line_no, column);
            }
            ++count;
            if (comma == std::string_view::npos) break;
            field_start = comma + 1;
        }
        if (dimension == 0) {
            dimension = count;
        } else if (count != dimension) {
            throw ParseError("dimension mismatch: row has " + std::to_string(count) + " coordinates, expected " +
                                 std::to_string(dimension),
                             line_no, 1);
        }
        if (end == text.size()) break;
    }
    if (dimension == 0) throw ParseError("no vertices in CSV input", line_no, 1);
    if (mode == ScalarKind::Rational) return Path<Rational>(dimension, std::move(exact));
    return Path<double>(dimension, std::move(approx));
}

Json to_json(const GroupLikeReport& report) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    Json pairs = Json::array();
    for (const auto& p : report.pairs) pairs.push_back({{"m", p.m}, {"n", p.n}, {"residual", p.residual}});
    doc["pairs"] = std::move(pairs);
    doc["tolerance"] = report.tolerance;
    doc["pass"] = report.pass;
    return doc;
}

Json to_json(const DegreePattern& pattern) {
    return Json{{"depth", pattern.depth}, {"nonzero", pattern.nonzero}, {"exact", pattern.exact}};
}

Json modulus_report(const DegreePattern& pattern) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["pattern"] = to_json(pattern);
    doc["trivial"] = pattern.trivial();
    doc["additive"] = additivity_json(verify_additive(pattern.nonzero, pattern.depth), pattern.depth);
    doc["min_modulus"] = nullptr;
    doc["frobenius"] = nullptr;
    if (pattern.trivial()) {
        doc["note"] = "signature trivial to depth " + std::to_string(pattern.depth);
        return doc;
    }
    if (auto d = min_modulus(pattern.nonzero)) {
        doc["min_modulus"] = *d;
        doc["note"] = "nonzero degrees through depth " + std::to_string(pattern.depth) + " are multiples of " +
                      std::to_string(*d);
        return doc;
    }
    const bool has_one = pattern.nonzero.front() == 1;
    if (has_one) {
        doc["note"] = "degree 1 is nonzero; the generated semigroup is all of Z+";
    } else {
        try {
            doc["frobenius"] = frobenius_number(pattern.nonzero);
            doc["note"] = "gcd 1: the semigroup generated by the nonzero degrees misses finitely many integers";
        } catch (const InvalidArgument& e) {
            doc["note"] = std::string("gcd 1; Frobenius diagnostic skipped: ") + e.what();
        }
    }
    return doc;
}

Json to_json(const AsymptoticsReport& report) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["depth"] = report.depth;
    doc["norm"] = std::string(to_string(report.kind));
    doc["exact"] = report.exact;
    Json terms = Json::array();
    for (const auto& t : report.terms) {
        Json term;
        term["degree"] = t.degree;
        term["b"] = t.b;
        term["a"] = t.a ? Json(*t.a) : Json(nullptr);
        term["running_sup"] = t.running_sup ? Json(*t.running_sup) : Json(nullptr);
        if (t.b_exact) term[report.kind == NormKind::L1Projective ? "b_exact" : "b_squared_exact"] = *t.b_exact;
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    doc["nonzero_degrees"] = report.nonzero_degrees;
    doc["sup"] = report.sup ? Json(*report.sup) : Json(nullptr);
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"i", v.i}, {"j", v.j}, {"b_sum", v.b_sum}, {"product", v.product}});
    doc["violations"] = std::move(violations);
    doc["length"] = report.length ? Json(*report.length) : Json(nullptr);
    doc["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
    doc["within_length"] = report.within_length ? Json(*report.within_length) : Json(nullptr);
    return doc;
}

Json to_json(const DilationReport& report) {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["modulus"] = report.modulus;
    doc["norm"] = std::string(to_string(report.kind));
    doc["tolerance"] = report.tolerance;
    Json residuals = Json::array();
    for (const auto& r : report.residuals) residuals.push_back({{"degree", r.degree}, {"residual", r.residual}});
    doc["residuals"] = std::move(residuals);
    doc["pass"] = report.pass;
    doc["pattern"] = to_json(report.pattern);
    doc["pattern_verdict"] = report.pattern_verdict;
    doc["agree"] = report.agree;
    return doc;
}

template Json to_json(const Tensor<Rational>&);
template Json to_json(const Tensor<double>&);
template Json to_json(const Tensor<Complex>&);
template Json to_json(const Path<Rational>&);
template Json to_json(const Path<double>&);

}  // namespace sigalg
