#ifndef QDRESS_TESTS_SUPPORT_HPP
#define QDRESS_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qdress/calgebra.hpp"
#include "qdress/freeu.hpp"
#include "qdress/rational_function.hpp"
#include "qdress/scalar.hpp"

namespace qdress::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline mpq_class small_rational(Rng& rng) {
    int num = uniform(rng, -6, 6);
    if (num == 0) num = 1;
    return rational(num, uniform(rng, 1, 4));
}

inline LaurentPoly random_laurent(Rng& rng, int max_terms = 3, bool sigma = true) {
    std::vector<LaurentPoly::Term> terms;
    int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) {
        Exp3 e{uniform(rng, -8, 8), sigma ? uniform(rng, -2, 2) : 0, sigma ? uniform(rng, -2, 2) : 0};
        terms.emplace_back(e, small_rational(rng));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

inline Scalar random_scalar(Rng& rng, bool sigma = true) {
    return Scalar(random_laurent(rng, 3, sigma), uniform(rng, 0, 1), uniform(rng, 0, 1) * uniform(rng, 0, 1));
}

/// A unit of the scalar ring: c q^{e/4} (1+q)^a (q-1)^b.
inline Scalar random_unit(Rng& rng) {
    Scalar s(LaurentPoly(Exp3{uniform(rng, -8, 8), uniform(rng, -2, 2), uniform(rng, -2, 2)}, small_rational(rng)),
             uniform(rng, 0, 2), uniform(rng, 0, 2));
    return s * Scalar(t4_binomial_power(1, uniform(rng, 0, 1)));
}

inline RationalFunction random_rf(Rng& rng) {
    auto poly = [&] {
        std::vector<mpq_class> c;
        int d = uniform(rng, 0, 3);
        for (int i = 0; i <= d; ++i) c.push_back(uniform(rng, 0, 2) == 0 ? mpq_class(0) : small_rational(rng));
        return UPoly(std::move(c));
    };
    UPoly den = poly();
    if (den.is_zero()) den = UPoly(mpq_class(1));
    return RationalFunction(poly(), den, uniform(rng, -3, 3));
}

inline Monomial random_monomial(Rng& rng, int max_degree) {
    Monomial m;
    int d = uniform(rng, 0, max_degree);
    for (int i = 0; i < d; ++i) m.n[static_cast<std::size_t>(uniform(rng, 0, 3))] += 1;
    return m;
}

inline CElement random_element(Rng& rng, int max_degree, int max_terms = 3) {
    CElement f;
    int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) f.add_term(random_monomial(rng, max_degree), Scalar(small_rational(rng)) * Scalar::qq(uniform(rng, -4, 4)));
    return f;
}

inline Gen random_letter(Rng& rng) {
    switch (uniform(rng, 0, 2)) {
        case 0: return Gen::cartan(uniform(rng, 1, 2), uniform(rng, -2, 2) | 1);
        case 1: return Gen::raise(uniform(rng, 1, 2));
        default: return Gen::lower(uniform(rng, 1, 2));
    }
}

inline Word random_word(Rng& rng, int max_len) {
    Word w;
    int n = uniform(rng, 0, max_len);
    for (int i = 0; i < n; ++i) w.push_back(random_letter(rng));
    return w;
}

/// Exact value of a sigma-free-after-substitution scalar at t = x, computed
/// term by term from the definition (independent of specialize()).
inline mpq_class evaluate_at(const Scalar& s, const mpq_class& x, int s1 = 0, int s2 = 0) {
    auto power = [](const mpq_class& b, int e) {
        mpq_class r = 1;
        mpq_class base = e < 0 ? mpq_class(1 / b) : b;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
        return r;
    };
    mpq_class num = 0;
    for (const auto& [e, c] : s.numerator().terms()) num += c * power(x, e.t + e.u * s1 + 2 * e.v * s2);
    mpq_class q = power(x, 4);
    return num / (power(q + 1, s.denom_power()) * power(q - 1, s.denom_power_qm1()));
}

inline mpq_class horner(const UPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Whether the denominator of r is nonzero at t = x (x != 0).
inline bool defined_at(const RationalFunction& r, const mpq_class& x) { return horner(r.den(), x) != 0; }

inline mpq_class evaluate_at(const RationalFunction& r, const mpq_class& x) {
    mpq_class shift = 1;
    for (int i = 0; i < (r.shift() < 0 ? -r.shift() : r.shift()); ++i) shift *= x;
    if (r.shift() < 0) shift = 1 / shift;
    return shift * horner(r.num(), x) / horner(r.den(), x);
}

}  // namespace qdress::testing

#endif
