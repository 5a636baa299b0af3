#ifndef QDRESS_LAURENT_HPP
#define QDRESS_LAURENT_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdress {

/// Exponent triple of the monomial t^t u^u v^v.
struct Exp3 {
    int t = 0;
    int u = 0;
    int v = 0;

    auto operator<=>(const Exp3&) const = default;
    bool operator==(const Exp3&) const = default;

    Exp3 operator+(const Exp3& o) const { return {t + o.t, u + o.u, v + o.v}; }
    Exp3 operator-() const { return {-t, -u, -v}; }
};

/// Sparse Laurent polynomial in t, u, v with rational coefficients.
///
/// Terms are kept sorted by exponent (lexicographic on (t, u, v)) and no
/// stored coefficient is zero. The zero polynomial has no terms.
class LaurentPoly {
public:
    using Term = std::pair<Exp3, mpq_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(const mpq_class& c);
    LaurentPoly(Exp3 e, const mpq_class& c);

    static LaurentPoly monomial(int t, int u = 0, int v = 0) { return LaurentPoly(Exp3{t, u, v}, 1); }

    /// Builds from an unsorted term list, combining duplicates.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;
    /// Coefficient of the given exponent (zero when absent).
    mpq_class coeff(Exp3 e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpq_class& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const mpq_class& c) { return a *= c; }

    /// Multiplies by the monomial t^e.t u^e.u v^e.v.
    LaurentPoly shifted(Exp3 e) const;

    /// Exact quotient by (t^4 + c) with c = +1 or -1, or nullopt if the
    /// division leaves a remainder.
    std::optional<LaurentPoly> divide_t4(int c) const;

    /// Substitutes u -> t^a, v -> t^b.
    LaurentPoly substitute_uv(int a, int b) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

/// (t^4 + c)^n for c = +1 or -1.
LaurentPoly t4_binomial_power(int c, int n);

}  // namespace qdress

#endif
