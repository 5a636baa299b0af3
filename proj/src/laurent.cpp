#include "qdress/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qdress {

LaurentPoly::LaurentPoly(const mpq_class& c) {
    if (c != 0) terms_.emplace_back(Exp3{}, c);
}

LaurentPoly::LaurentPoly(Exp3 e, const mpq_class& c) {
    if (c != 0) terms_.emplace_back(e, c);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly out;
    for (auto& [e, c] : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == e) {
            out.terms_.back().second += c;
            if (out.terms_.back().second == 0) out.terms_.pop_back();
        } else if (c != 0) {
            out.terms_.emplace_back(e, std::move(c));
        }
    }
    return out;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exp3{});
}

mpq_class LaurentPoly::coeff(Exp3 e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& a, const Exp3& k) { return a.first < k; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& term : out.terms_) term.second = -term.second;
    return out;
}

namespace {

std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool subtract) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? mpq_class(-b[j].second) : b[j].second);
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(a[i].second - b[j].second)
                                   : mpq_class(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) {
        LaurentPoly out = a.shifted(b.terms_[0].first);
        if (b.terms_[0].second != 1) out *= b.terms_[0].second;
        return out;
    }
    if (a.size() == 1) return b * a;
    std::map<Exp3, mpq_class> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentPoly out;
    out.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.terms_.emplace_back(e, std::move(c));
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(Exp3 e) const {
    LaurentPoly out = *this;
    for (auto& term : out.terms_) term.first = term.first + e;
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_t4(int c) const {
    if (c != 1 && c != -1) throw std::invalid_argument("divide_t4: c must be +1 or -1");
    if (terms_.empty()) return LaurentPoly{};
    // Group by (u, v); each group is a univariate Laurent polynomial in t.
    std::map<std::pair<int, int>, std::vector<std::pair<int, const mpq_class*>>> groups;
    for (const auto& [e, coef] : terms_) groups[{e.u, e.v}].emplace_back(e.t, &coef);

    std::vector<Term> out;
    for (const auto& [uv, ts] : groups) {
        // ts is sorted ascending in t because terms_ is sorted with t major
        // and (u, v) fixed within the group.
        int lo = ts.front().first;
        int hi = ts.back().first;
        if (hi - lo < 4) return std::nullopt;
        std::vector<mpq_class> r(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [t, coef] : ts) r[static_cast<std::size_t>(t - lo)] = *coef;
        std::vector<mpq_class> q(r.size() - 4);
        for (std::size_t i = r.size() - 1; i >= 4; --i) {
            if (r[i] == 0) continue;
            q[i - 4] = r[i];
            r[i - 4] -= c * r[i];
            r[i] = 0;
        }
        for (std::size_t i = 0; i < 4; ++i)
            if (r[i] != 0) return std::nullopt;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) out.emplace_back(Exp3{lo + static_cast<int>(i), uv.first, uv.second}, q[i]);
    }
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::substitute_uv(int a, int b) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(Exp3{e.t + a * e.u + b * e.v, 0, 0}, c);
    return from_terms(std::move(out));
}

LaurentPoly t4_binomial_power(int c, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, LaurentPoly> cache;
    if (n < 0) throw std::invalid_argument("t4_binomial_power: negative power");
    std::lock_guard lock(mu);
    auto it = cache.find({c, n});
    if (it != cache.end()) return it->second;
    LaurentPoly base = LaurentPoly::monomial(4) + LaurentPoly(mpq_class(c));
    LaurentPoly acc(mpq_class(1));
    for (int i = 0; i < n; ++i) acc *= base;
    cache.emplace(std::make_pair(c, n), acc);
    return acc;
}

}  // namespace qdress
