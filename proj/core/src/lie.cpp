#include "sigalg/lie.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "sigalg/errors.hpp"

namespace sigalg {

bool LieElement::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Tensor<Rational> LieElement::embed(std::size_t depth) const {
    if (depth < degree) throw InvalidArgument("depth is below the degree of the Lie element");
    Tensor<Rational> out(dimension, depth);
    std::copy(coefficients.begin(), coefficients.end(), out.level(degree).begin());
    return out;
}

LieElement lie_letter(std::size_t letter, std::size_t dimension) {
    if (letter < 1 || letter > dimension)
        throw InvalidArgument("letter " + std::to_string(letter) + " outside 1.." + std::to_string(dimension));
    LieElement e{dimension, 1, std::vector<Rational>(dimension)};
    e.coefficients[letter - 1] = 1;
    return e;
}

LieElement lie_bracket(const LieElement& x, const LieElement& y) {
    if (x.dimension != y.dimension) throw ShapeMismatch("bracket of Lie elements of different dimension");
    auto xy = outer<Rational>(x.coefficients, y.coefficients);
    const auto yx = outer<Rational>(y.coefficients, x.coefficients);
    for (std::size_t i = 0; i < xy.size(); ++i) xy[i] -= yx[i];
    return {x.dimension, x.degree + y.degree, std::move(xy)};
}

namespace {

void require_compatible(const LieElement& x, const LieElement& y) {
    if (x.dimension != y.dimension) throw ShapeMismatch("Lie elements of different dimension");
    if (x.degree != y.degree) throw InvalidArgument("sum of Lie elements of different degree is not homogeneous");
}

}  // namespace

LieElement operator+(const LieElement& x, const LieElement& y) {
    require_compatible(x, y);
    LieElement out = x;
    for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += y.coefficients[i];
    return out;
}

LieElement operator-(const LieElement& x, const LieElement& y) {
    require_compatible(x, y);
    LieElement out = x;
    for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] -= y.coefficients[i];
    return out;
}

LieElement operator*(const Rational& factor, const LieElement& x) {
    LieElement out = x;
    for (auto& c : out.coefficients) c *= factor;
    return out;
}

namespace {

class BracketParser {
public:
    BracketParser(std::string_view text, std::size_t dimension) : text_(text), dimension_(dimension) {}

    LieElement parse() {
        auto result = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    LieElement combine(const LieElement& lhs, const LieElement& rhs, bool add, std::size_t at) {
        if (lhs.degree != rhs.degree) {
            pos_ = at;
            fail("summands of degree " + std::to_string(lhs.degree) + " and " + std::to_string(rhs.degree) +
                 " are not homogeneous");
        }
        return add ? lhs + rhs : lhs - rhs;
    }

    LieElement expr() {
        auto lhs = term();
        while (true) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('+')) lhs = combine(lhs, term(), true, at);
            else if (accept('-')) lhs = combine(lhs, term(), false, at);
            else return lhs;
        }
    }

    LieElement term() {
        if (accept('-')) return Rational(-1) * term();
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            std::string number = digits();
            bool is_fraction = false;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) fail("expected denominator");
                number += "/" + den;
                is_fraction = true;
            }
            if (accept('*')) {
                Rational factor;
                try {
                    factor = parse_rational(number);
                } catch (const Error&) {
                    pos_ = start;
                    fail("malformed scalar");
                }
                return factor * atom();
            }
            if (is_fraction) fail("expected '*' after rational scalar");
            return letter(number, start);
        }
        return atom();
    }

    LieElement atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            auto x = expr();
            expect(',');
            auto y = expr();
            expect(']');
            return lie_bracket(x, y);
        }
        if (c == '(') {
            ++pos_;
            auto x = expr();
            expect(')');
            return x;
        }
        if (c == 'e' || c == 'E') {
            ++pos_;
            const std::size_t start = pos_;
            const std::string number = digits();
            if (number.empty()) fail("expected letter index after 'e'");
            return letter(number, start);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            return letter(digits(), start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    LieElement letter(const std::string& number, std::size_t at) {
        if (number.size() > 9) {
            pos_ = at;
            fail("letter index too large");
        }
        const std::size_t index = std::stoul(number);
        if (index < 1 || index > dimension_) {
            pos_ = at;
            fail("letter " + number + " outside 1.." + std::to_string(dimension_));
        }
        return lie_letter(index, dimension_);
    }

    std::string_view text_;
    std::size_t dimension_;
    std::size_t pos_ = 0;
};

}  // namespace

LieElement lie_generator(std::string_view expression, std::size_t dimension) {
    if (dimension == 0) throw InvalidArgument("dimension must be positive");
    return BracketParser(expression, dimension).parse();
}

}  // namespace sigalg
