#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace sigalg {

/// Arbitrary-precision rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Complex = std::complex<double>;

enum class ScalarKind { Rational, F64, C64 };

std::string_view to_string(ScalarKind kind);
ScalarKind parse_scalar_kind(std::string_view text);

template <class S>
concept Scalar = std::is_same_v<S, Rational> || std::is_same_v<S, double> || std::is_same_v<S, Complex>;

template <class S>
concept RealScalar = std::is_same_v<S, Rational> || std::is_same_v<S, double>;

template <Scalar S>
constexpr ScalarKind scalar_kind_of() {
    if constexpr (std::is_same_v<S, Rational>) return ScalarKind::Rational;
    else if constexpr (std::is_same_v<S, double>) return ScalarKind::F64;
    else return ScalarKind::C64;
}

template <Scalar S>
constexpr bool is_exact_v = std::is_same_v<S, Rational>;

/// Parses "p/q", an integer, or a decimal literal such as "-1.25e-3" exactly.
Rational parse_rational(std::string_view text);

/// Rational from the shortest decimal that round-trips the double, so 0.1 becomes 1/10.
Rational rational_from_double(double value);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& value);

/// Correctly rounded conversion.
double to_double(const Rational& value);

inline double to_double(double value) { return value; }

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(double value) { return value == 0.0; }
inline bool is_zero(const Complex& value) { return value == Complex{}; }

/// Magnitude as binary64.
inline double magnitude(const Rational& value) { return std::abs(to_double(value)); }
inline double magnitude(double value) { return std::abs(value); }
inline double magnitude(const Complex& value) { return std::abs(value); }

template <Scalar S>
S from_integer(long value) {
    if constexpr (std::is_same_v<S, Rational>) return Rational(value);
    else return S(static_cast<double>(value));
}

inline Complex to_complex(const Rational& value) { return {to_double(value), 0.0}; }
inline Complex to_complex(double value) { return {value, 0.0}; }
inline Complex to_complex(const Complex& value) { return value; }

}  // namespace sigalg
