#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sigalg/tensor.hpp"

namespace sigalg {

/// Homogeneous element of the free Lie algebra, stored as its degree-k tensor.
struct LieElement {
    std::size_t dimension = 0;
    std::size_t degree = 0;
    std::vector<Rational> coefficients;  ///< d^degree entries, lexicographic words

    bool is_zero() const;

    /// Places the element in level `degree` of a depth-N tensor (N >= degree).
    Tensor<Rational> embed(std::size_t depth) const;

    friend bool operator==(const LieElement&, const LieElement&) = default;
};

/// Basis letter e_i, 1-based as in bracket expressions.
LieElement lie_letter(std::size_t letter, std::size_t dimension);

/// [x, y] = x ⊗ y - y ⊗ x.
LieElement lie_bracket(const LieElement& x, const LieElement& y);

/// Sum; throws InvalidArgument when degrees or dimensions differ.
LieElement operator+(const LieElement& x, const LieElement& y);
LieElement operator-(const LieElement& x, const LieElement& y);
LieElement operator*(const Rational& factor, const LieElement& x);

/// Parses a bracket expression over letters 1..d:
///
///     expr   ::= term (("+" | "-") term)*
///     term   ::= [rational "*"] atom | "-" term
///     atom   ::= letter | "[" expr "," expr "]" | "(" expr ")"
///     letter ::= integer | "e" integer
///
/// e.g. "[1,2]", "[1,[1,2]]", "1/2*[1,2] - [2,[1,2]]". Every summand must have
/// the same degree. Throws ParseError (line 1, 1-based column) when malformed.
LieElement lie_generator(std::string_view expression, std::size_t dimension);

}  // namespace sigalg
