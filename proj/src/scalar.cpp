#include "qdress/scalar.hpp"

#include <algorithm>

namespace qdress {

Scalar::Scalar(LaurentPoly num, int kp, int km) : num_(std::move(num)), kp_(kp), km_(km) {
    if (kp < 0 || km < 0) throw std::invalid_argument("Scalar: negative denominator power");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        kp_ = km_ = 0;
        return;
    }
    while (kp_ > 0) {
        auto q = num_.divide_t4(1);
        if (!q) break;
        num_ = std::move(*q);
        --kp_;
    }
    while (km_ > 0) {
        auto q = num_.divide_t4(-1);
        if (!q) break;
        num_ = std::move(*q);
        --km_;
    }
}

bool Scalar::is_sigma_free() const {
    return std::all_of(num_.terms().begin(), num_.terms().end(),
                       [](const auto& term) { return term.first.u == 0 && term.first.v == 0; });
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.kp_ == b.kp_ && a.km_ == b.km_) {
        Scalar out;
        out.num_ = a.num_ + b.num_;
        out.kp_ = a.kp_;
        out.km_ = a.km_;
        out.normalize();
        return out;
    }
    int kp = std::max(a.kp_, b.kp_);
    int km = std::max(a.km_, b.km_);
    auto lift = [&](const Scalar& s) {
        LaurentPoly n = s.num_;
        if (kp > s.kp_) n *= t4_binomial_power(1, kp - s.kp_);
        if (km > s.km_) n *= t4_binomial_power(-1, km - s.km_);
        return n;
    };
    Scalar out;
    out.num_ = lift(a) + lift(b);
    out.kp_ = kp;
    out.km_ = km;
    out.normalize();
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Scalar out;
    out.num_ = a.num_ * b.num_;
    out.kp_ = a.kp_ + b.kp_;
    out.km_ = a.km_ + b.km_;
    if (out.kp_ > 0 || out.km_ > 0) out.normalize();
    return out;
}

namespace {

struct Factored {
    LaurentPoly::Term unit;
    int plus = 0;
    int minus = 0;
};

std::optional<Factored> factor_units(const LaurentPoly& n) {
    if (n.is_zero()) return std::nullopt;
    LaurentPoly rest = n;
    Factored f;
    while (rest.size() > 1) {
        if (auto q = rest.divide_t4(1)) {
            rest = std::move(*q);
            ++f.plus;
        } else if (auto q2 = rest.divide_t4(-1)) {
            rest = std::move(*q2);
            ++f.minus;
        } else {
            return std::nullopt;
        }
    }
    f.unit = rest.terms().front();
    return f;
}

}  // namespace

bool Scalar::is_invertible() const { return factor_units(num_).has_value(); }

Scalar Scalar::inverse() const {
    auto f = factor_units(num_);
    if (!f) throw std::domain_error("Scalar is not invertible in the coefficient ring");
    LaurentPoly n(-f->unit.first, 1 / f->unit.second);
    if (kp_ > 0) n *= t4_binomial_power(1, kp_);
    if (km_ > 0) n *= t4_binomial_power(-1, km_);
    return Scalar(std::move(n), f->plus, f->minus);
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar acc(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Scalar Scalar::specialize(int s1, int s2) const {
    return Scalar(num_.substitute_uv(s1, 2 * s2), kp_, km_);
}

namespace {

int lattice(const mpq_class& x, int scale, const char* what) {
    mpq_class y = x * scale;
    if (y.get_den() != 1) throw UnrepresentableExponent(std::string("exponent not representable: ") + what);
    if (!y.get_num().fits_sint_p()) throw UnrepresentableExponent("exponent out of range");
    return static_cast<int>(y.get_num().get_si());
}

}  // namespace

Scalar q_power(const QExponent& e, const Sigma& sigma) {
    int t = lattice(e.c0, 4, "constant part off the quarter-integer lattice");
    int u = lattice(e.s1, 4, "s1 part finer than s1/4");
    int v = lattice(e.s2, 2, "s2 part finer than s2/2");
    if (sigma.is_generic()) return Scalar::unit(t, u, v);
    return Scalar::unit(t + u * *sigma.s1 + 2 * v * *sigma.s2);
}

Scalar quantum_integer(const QExponent& m, Grain grain, const Sigma& sigma) {
    mpq_class g = grain == Grain::Q ? mpq_class(1) : mpq_class(1, 2);
    Scalar numer = q_power(m * g, sigma) - q_power(-(m * g), sigma);
    // p - p^-1 = t^-4 (t^4 - 1)(t^4 + 1) for p = q and t^-2 (t^4 - 1) for p = q^{1/2}.
    if (grain == Grain::Q) return numer * Scalar(LaurentPoly::monomial(4), 1, 1);
    return numer * Scalar(LaurentPoly::monomial(2), 0, 1);
}

}  // namespace qdress
