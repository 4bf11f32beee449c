#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "sigalg/asymptotics.hpp"
#include "sigalg/complexify.hpp"
#include "sigalg/path.hpp"
#include "sigalg/semigroup.hpp"
#include "sigalg/shuffle.hpp"
#include "sigalg/tensor.hpp"

namespace sigalg {

using Json = nlohmann::ordered_json;

/// Version stamped into every report document.
inline constexpr int kReportSchemaVersion = 1;

using AnyTensor = std::variant<Tensor<Rational>, Tensor<double>, Tensor<Complex>>;
using AnyPath = std::variant<Path<Rational>, Path<double>>;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);

/// Two-space indented, trailing newline. Byte-stable for equal documents.
std::string dump(const Json& document);

/// {"dimension", "depth", "scalar", "levels": [{"degree", "coefficients"}]}.
/// Rationals are "p/q" strings, complex entries [re, im] pairs.
template <Scalar S>
Json to_json(const Tensor<S>& tensor);
Json to_json(const AnyTensor& tensor);
AnyTensor tensor_from_json(const Json& document);

/// {"dimension", "points": [[...], ...]}; rationals as "p/q" strings.
template <RealScalar S>
Json to_json(const Path<S>& path);

/// Coordinates may be numbers or rational strings. In rational mode decimal
/// numbers are read by their shortest round-trip spelling (0.1 -> 1/10).
AnyPath path_from_json(const Json& document, ScalarKind mode);

/// One vertex per row, comma separated. Blank lines and '#' comments are skipped.
AnyPath path_from_csv(std::string_view text, ScalarKind mode);

/// True when the document looks like a tensor (has "levels") rather than a path.
bool is_tensor_document(const Json& document);

Json to_json(const GroupLikeReport& report);
Json to_json(const DegreePattern& pattern);
Json to_json(const AsymptoticsReport& report);
Json to_json(const DilationReport& report);

/// Pattern, additivity verdict on the nonzero degrees and their modulus (or, when
/// the gcd is 1 and the degrees allow it, the Frobenius number of the degrees).
Json modulus_report(const DegreePattern& pattern);

}  // namespace sigalg
