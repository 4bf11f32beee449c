#include "sigalg/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>

#include "sigalg/errors.hpp"

namespace sigalg {

std::string_view to_string(ScalarKind kind) {
    switch (kind) {
        case ScalarKind::Rational: return "rational";
        case ScalarKind::F64: return "f64";
        case ScalarKind::C64: return "c64";
    }
    return "unknown";
}

ScalarKind parse_scalar_kind(std::string_view text) {
    if (text == "rational") return ScalarKind::Rational;
    if (text == "f64") return ScalarKind::F64;
    if (text == "c64") return ScalarKind::C64;
    throw InvalidArgument("unknown scalar kind '" + std::string(text) + "'");
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) bad_rational(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_rational(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(num), 10), d);
        result.canonicalize();
    } else {
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            auto exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) bad_rational(text);
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
        }
        std::string digits;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            auto int_part = mantissa.substr(0, dot);
            auto frac_part = mantissa.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) bad_rational(text);
            if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
                bad_rational(text);
            digits = std::string(int_part) + std::string(frac_part);
            exponent -= static_cast<long>(frac_part.size());
        } else {
            if (!all_digits(mantissa)) bad_rational(text);
            digits = std::string(mantissa);
        }
        mpz_class value(digits, 10);
        if (exponent >= 0) {
            result = Rational(value * pow10(static_cast<unsigned long>(exponent)));
        } else {
            result = Rational(value, pow10(static_cast<unsigned long>(-exponent)));
            result.canonicalize();
        }
    }
    if (negative) result = -result;
    return result;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw InvalidArgument("non-finite value cannot be made rational");
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{}) throw InvalidArgument("cannot format double");
    return parse_rational(std::string_view(buffer, static_cast<std::size_t>(end - buffer)));
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) {
    // mpq_get_d truncates toward zero; pick whichever neighbour is nearer.
    double truncated = mpq_get_d(value.get_mpq_t());
    if (!std::isfinite(truncated)) return truncated;
    double away = std::nextafter(truncated, sgn(value) >= 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away)) return truncated;
    Rational lo_gap = abs(value - Rational(truncated));
    Rational hi_gap = abs(Rational(away) - value);
    if (hi_gap < lo_gap) return away;
    if (hi_gap == lo_gap) {
        // ties to even mantissa
        std::int64_t bits;
        static_assert(sizeof bits == sizeof truncated);
        std::memcpy(&bits, &truncated, sizeof bits);
        return (bits & 1) ? away : truncated;
    }
    return truncated;
}

}  // namespace sigalg
