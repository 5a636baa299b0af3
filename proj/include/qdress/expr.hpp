#ifndef QDRESS_EXPR_HPP
#define QDRESS_EXPR_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qdress/calgebra.hpp"
#include "qdress/freeu.hpp"

namespace qdress {

/// Syntax error with the 0-based character offset it was detected at.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Expression tree over rational literals, q-powers, w1..w4 and + - * / ^.
struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
    struct Number { mpq_class value; };
    struct QPower { QExponent exponent; };
    struct Generator { int index; };
    struct Unary { ExprPtr operand; };  // negation
    struct Binary { char op; ExprPtr lhs; ExprPtr rhs; };
    struct Power { ExprPtr base; int exponent; };

    std::variant<Number, QPower, Generator, Unary, Binary, Power> node;
    std::size_t pos = 0;
};

/// Grammar (precedence low to high):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/' | juxtaposition) unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' int)?         q^(affine) or q^int for the atom q
///   atom   := number | 'q' | 'w1'..'w4' | '(' expr ')'
/// Inside q^( ... ) the symbols s1 and s2 may appear affinely; the constant
/// part must be a multiple of 1/4, s1 of 1/4 and s2 of 1/2.
ExprPtr parse_expr(std::string_view text);

/// Evaluates to normal form. Division is allowed only by invertible scalars.
CElement evaluate(const ExprNode& e);
inline CElement evaluate_text(std::string_view text) { return evaluate(*parse_expr(text)); }

/// Word grammar: letters K1 K2 (q^{H_i/2}), K1^n, qH1 qH2 (q^{H_i}), qH1^n,
/// E1 E2 (X_i^+), F1 F2 (X_i^-), juxtaposed with optional whitespace; "1" or
/// the empty string is the empty word.
Word parse_word(std::string_view text);

}  // namespace qdress

#endif
