#include "qdress/calgebra.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace qdress {

Monomial Monomial::gen(int j) {
    if (j < 1 || j > 4) throw std::out_of_range("generator index must be in 1..4");
    Monomial m;
    m.n[static_cast<std::size_t>(j - 1)] = 1;
    return m;
}

namespace {

Monomial bump(Monomial m, int j, int by = 1) {
    m.n[static_cast<std::size_t>(j - 1)] += by;
    return m;
}

Monomial mono(int a, int b, int c, int d) { return Monomial{{a, b, c, d}}; }

// Normal form of w_k w_j for k > j, read off the defining relations:
//   w2 w1 = q w1 w2,   w3 w2 = q w2 w3,   w4 w3 = q w3 w4,
//   w3 w1 = w1 w3 - q^{-1/2}(q - 1) w2^2,
//   w4 w2 = w2 w4 - q^{-1/2}(q - q^{-1}) w3,
//   w4 w1 = q^{-1} w1 w4 + (1 - q^{-2}) w2.
CElement swap_rule(int k, int j) {
    CElement r;
    switch (k * 10 + j) {
        case 21:
            r.add_term(mono(1, 1, 0, 0), Scalar::qq(4));
            break;
        case 32:
            r.add_term(mono(0, 1, 1, 0), Scalar::qq(4));
            break;
        case 43:
            r.add_term(mono(0, 0, 1, 1), Scalar::qq(4));
            break;
        case 31:
            r.add_term(mono(1, 0, 1, 0), Scalar(1));
            r.add_term(mono(0, 2, 0, 0), -(Scalar::qq(2) - Scalar::qq(-2)));
            break;
        case 42:
            r.add_term(mono(0, 1, 0, 1), Scalar(1));
            r.add_term(mono(0, 0, 1, 0), -(Scalar::qq(2) - Scalar::qq(-6)));
            break;
        case 41:
            r.add_term(mono(1, 0, 0, 1), Scalar::qq(-4));
            r.add_term(mono(0, 1, 0, 0), Scalar(1) - Scalar::qq(-8));
            break;
        default:
            throw std::logic_error("swap_rule: pair is already ordered");
    }
    return r;
}

std::mutex cache_mu;
std::map<std::pair<Monomial, int>, CElement> right_cache;

CElement times_gen(const CElement& a, int j);

// Normal form of m * w_j for an ordered monomial m.
CElement right_mul_gen(const Monomial& m, int j) {
    int k = 0;
    for (int i = 4; i >= 1; --i) {
        if (m[i] > 0) {
            k = i;
            break;
        }
    }
    if (k <= j) return CElement(bump(m, j), Scalar(1));

    {
        std::lock_guard lock(cache_mu);
        auto it = right_cache.find({m, j});
        if (it != right_cache.end()) return it->second;
    }

    // m = m' w_k, so m w_j = m' (w_k w_j), rewritten into ordered pairs.
    Monomial head = bump(m, k, -1);
    CElement out;
    for (const CElement rule = swap_rule(k, j); const auto& [p, c] : rule.terms()) {
        CElement acc(head, c);
        for (int g = 1; g <= 4; ++g)
            for (int e = 0; e < p[g]; ++e) acc = times_gen(acc, g);
        out += acc;
    }

    std::lock_guard lock(cache_mu);
    right_cache.emplace(std::make_pair(m, j), out);
    return out;
}

CElement times_gen(const CElement& a, int j) {
    CElement out;
    for (const auto& [m, c] : a.terms()) out += right_mul_gen(m, j).scaled(c);
    return out;
}

}  // namespace

CElement mul_monomials(const Monomial& m1, const Monomial& m2) {
    CElement acc(m1, Scalar(1));
    for (int g = 1; g <= 4; ++g)
        for (int e = 0; e < m2[g]; ++e) acc = times_gen(acc, g);
    return acc;
}

CElement operator*(const CElement& a, const CElement& b) {
    CElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Scalar c = ca * cb;
            if (mb == Monomial::unit()) {
                out.add_term(ma, c);
                continue;
            }
            out += mul_monomials(ma, mb).scaled(c);
        }
    }
    return out;
}

CElement pow(const CElement& a, int n) {
    if (n < 0) throw std::invalid_argument("pow: negative exponent");
    CElement acc(Scalar(1));
    for (int i = 0; i < n; ++i) acc = acc * a;
    return acc;
}

CElement dependent_generator(int j, int k) {
    if (j < 1 || k > 5 || j >= k) throw std::out_of_range("dependent_generator: need 1 <= j < k <= 5");
    const Scalar inv_1q = Scalar(LaurentPoly(mpq_class(1)), 1);  // 1/(1+q)
    CElement z;
    switch (j * 10 + k) {
        case 12: return w(1);
        case 13: return w(2);
        case 14: return w(3);
        case 23: return w(4);
        case 45: return -w(1);
        case 34:
            z.add_term(mono(0, 0, 0, 1), -Scalar::qq(2));
            return z;
        case 35:
            z.add_term(mono(0, 1, 0, 0), -Scalar::qq(-2));
            z.add_term(mono(1, 0, 0, 1), Scalar::qq(2));
            return z;
        case 24:
            z.add_term(mono(0, 0, 0, 2), -(Scalar::qq(2) * inv_1q));
            return z;
        case 15:
            z.add_term(mono(1, 0, 1, 0), Scalar(-1));
            z.add_term(mono(0, 2, 0, 0), -(Scalar::qq(-2) * inv_1q));
            return z;
        case 25:
            z.add_term(mono(0, 0, 1, 0), -Scalar::qq(-4));
            z.add_term(mono(0, 1, 0, 1), -Scalar::qq(-2));
            z.add_term(mono(1, 0, 0, 2), Scalar::qq(2) * inv_1q);
            return z;
        default:
            break;
    }
    throw std::logic_error("dependent_generator: unreachable");
}

std::array<CElement, 6> algebra_relation_residuals() {
    const Scalar q = Scalar::qq(4);
    const Scalar qi = Scalar::qq(-4);
    const Scalar qmh = Scalar::qq(-2);
    return {
        w(2) * w(1) - (w(1) * w(2)).scaled(q),
        w(3) * w(2) - (w(2) * w(3)).scaled(q),
        w(4) * w(3) - (w(3) * w(4)).scaled(q),
        w(3) * w(1) - w(1) * w(3) + (w(2) * w(2)).scaled(qmh * (q - Scalar(1))),
        w(4) * w(2) - w(2) * w(4) + w(3).scaled(qmh * (q - qi)),
        w(4) * w(1) - (w(1) * w(4)).scaled(qi) - w(2).scaled(Scalar(1) - qi * qi),
    };
}

std::array<int, 2> monomial_weight(const Monomial& m) {
    return {-m[1] + m[3] + m[4], 2 * m[1] + m[2] - m[4]};
}

}  // namespace qdress
