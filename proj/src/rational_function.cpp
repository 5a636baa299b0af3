#include "qdress/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdress {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::valuation() const {
    int v = 0;
    while (v < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(v)] == 0) ++v;
    return v;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const mpq_class& k) const {
    if (k == 0) return {};
    UPoly out = *this;
    for (auto& x : out.c_) x *= k;
    return out;
}

UPoly UPoly::shifted_up(int n) const {
    if (is_zero() || n == 0) return *this;
    UPoly out;
    out.c_.assign(static_cast<std::size_t>(n), mpq_class(0));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

UPoly UPoly::shifted_down(int n) const {
    if (is_zero() || n == 0) return *this;
    if (valuation() < n) throw std::logic_error("UPoly::shifted_down: not divisible");
    UPoly out;
    out.c_.assign(c_.begin() + n, c_.end());
    return out;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lead());
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> r = a.c_;
    int db = b.degree();
    int da = a.degree();
    std::vector<mpq_class> q(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
    mpq_class inv_lead = 1 / b.lead();
    for (int i = da; i >= db; --i) {
        const mpq_class& ri = r[static_cast<std::size_t>(i)];
        if (ri == 0) continue;
        mpq_class f = ri * inv_lead;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(i - db)] = f;
    }
    quot = UPoly(std::move(q));
    rem = UPoly(std::move(r));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RationalFunction::RationalFunction(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}

RationalFunction::RationalFunction(UPoly num, UPoly den, int shift)
    : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

RationalFunction RationalFunction::t_power(int e) { return RationalFunction(UPoly(mpq_class(1)), UPoly(mpq_class(1)), e); }

RationalFunction RationalFunction::from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    int lo = p.terms().front().first.t;
    int hi = lo;
    for (const auto& [e, c] : p.terms()) {
        if (e.u != 0 || e.v != 0) throw std::domain_error("from_laurent: polynomial depends on s1 or s2");
        lo = std::min(lo, e.t);
        hi = std::max(hi, e.t);
    }
    std::vector<mpq_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, coef] : p.terms()) c[static_cast<std::size_t>(e.t - lo)] = coef;
    return RationalFunction(UPoly(std::move(c)), UPoly(mpq_class(1)), lo);
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(mpq_class(1));
        shift_ = 0;
        return;
    }
    int vn = num_.valuation();
    if (vn > 0) {
        num_ = num_.shifted_down(vn);
        shift_ += vn;
    }
    int vd = den_.valuation();
    if (vd > 0) {
        den_ = den_.shifted_down(vd);
        shift_ -= vd;
    }
    if (den_.degree() > 0) {
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            UPoly q, r;
            UPoly::divmod(num_, g, q, r);
            num_ = std::move(q);
            UPoly::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    mpq_class lead = den_.lead();
    if (lead != 1) {
        num_ = num_ * (1 / lead);
        den_ = den_ * (1 / lead);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int s = std::min(a.shift_, b.shift_);
    UPoly an = a.num_.shifted_up(a.shift_ - s);
    UPoly bn = b.num_.shifted_up(b.shift_ - s);
    if (a.den_ == b.den_) return RationalFunction(an + bn, a.den_, s);
    return RationalFunction(an * b.den_ + bn * a.den_, a.den_ * b.den_, s);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        RationalFunction out;
        out.num_ = a.num_ * b.num_;
        out.shift_ = a.shift_ + b.shift_;
        return out;
    }
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, a.shift_ + b.shift_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(den_, num_, -shift_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction to_rational_function(const Scalar& s) {
    RationalFunction n = RationalFunction::from_laurent(s.numerator());
    if (s.denom_power() == 0 && s.denom_power_qm1() == 0) return n;
    LaurentPoly d = t4_binomial_power(1, s.denom_power()) * t4_binomial_power(-1, s.denom_power_qm1());
    return n / RationalFunction::from_laurent(d);
}

RationalFunction specialize(const Scalar& s, int s1, int s2) { return to_rational_function(s.specialize(s1, s2)); }

}  // namespace qdress
