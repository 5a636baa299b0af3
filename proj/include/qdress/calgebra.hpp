#ifndef QDRESS_CALGEBRA_HPP
#define QDRESS_CALGEBRA_HPP

#include <array>
#include <compare>
#include <map>

#include "qdress/scalar.hpp"

namespace qdress {

/// Ordered monomial w1^n1 w2^n2 w3^n3 w4^n4.
struct Monomial {
    std::array<int, 4> n{};

    static Monomial unit() { return {}; }
    /// The generator w_j, j in 1..4.
    static Monomial gen(int j);

    int degree() const { return n[0] + n[1] + n[2] + n[3]; }
    int operator[](int j) const { return n[static_cast<std::size_t>(j - 1)]; }
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

/// Finite linear combination of ordered monomials, Coeff-valued.
/// Zero coefficients are never stored; ordering is lexicographic in the
/// exponent tuple.
template <class Coeff>
class LinComb {
public:
    using Map = std::map<Monomial, Coeff>;

    LinComb() = default;
    LinComb(const Monomial& m, Coeff c) { add_term(m, std::move(c)); }
    explicit LinComb(Coeff c) { add_term(Monomial::unit(), std::move(c)); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add_term(const Monomial& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb operator-() const {
        LinComb out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    LinComb scaled(const Coeff& s) const {
        LinComb out;
        if (s.is_zero()) return out;
        for (const auto& [m, c] : terms_) out.add_term(m, c * s);
        return out;
    }

    bool operator==(const LinComb&) const = default;

private:
    Map terms_;
};

/// Element of the coordinate algebra with exact scalar coefficients.
using CElement = LinComb<Scalar>;

inline CElement w(int j) { return CElement(Monomial::gen(j), Scalar(1)); }

/// Normal form of the product m1 * m2 in the coordinate algebra.
CElement mul_monomials(const Monomial& m1, const Monomial& m2);
CElement operator*(const CElement& a, const CElement& b);
CElement pow(const CElement& a, int n);

/// The dependent coordinate z*_{jk}, 1 <= j < k <= 5, in terms of w1..w4.
CElement dependent_generator(int j, int k);

/// The six commutation relations of the algebra, each as lhs - rhs built from
/// products of generators (so every entry vanishes after normal ordering).
std::array<CElement, 6> algebra_relation_residuals();

/// Exponents of q^{H1} and q^{H2} weights carried by a monomial under the
/// Cartan part of the dressing action: (-n1 + n3 + n4, 2 n1 + n2 - n4).
std::array<int, 2> monomial_weight(const Monomial& m);

}  // namespace qdress

#endif
