#ifndef QDRESS_TEXT_HPP
#define QDRESS_TEXT_HPP

#include <string>

#include "qdress/calgebra.hpp"
#include "qdress/freeu.hpp"
#include "qdress/rational_function.hpp"
#include "qdress/scalar.hpp"

namespace qdress {

// Plain ASCII rendering. Powers of t, u, v are folded into one exponent of q
// per term, e.g. t^2 u^-1 prints as q^(1/2 - s1/4). Every rendering here is
// accepted back by parse_expr().

std::string to_string(const QExponent& e);
std::string to_string(const Scalar& s);
std::string to_string(const RationalFunction& r);
std::string to_string(const Monomial& m);
std::string to_string(const Word& w);

/// Terms joined by " + ", each "coeff * w1^n1 w2^n2 ..." (coefficient 1 and
/// zero exponents omitted). The zero element prints as "0".
template <class Coeff>
std::string to_string(const LinComb<Coeff>& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first) out += " + ";
        first = false;
        if (m == Monomial::unit()) {
            out += to_string(c);
            continue;
        }
        if (!c.is_one()) {
            std::string cs = to_string(c);
            bool bare = cs.find_first_of(" /") == std::string::npos;
            out += (bare ? cs : "(" + cs + ")") + " * ";
        }
        out += to_string(m);
    }
    return out;
}

}  // namespace qdress

#endif
