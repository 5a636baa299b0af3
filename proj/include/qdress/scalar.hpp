#ifndef QDRESS_SCALAR_HPP
#define QDRESS_SCALAR_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "qdress/laurent.hpp"

namespace qdress {

/// Exact coefficient: a Laurent polynomial in t = q^{1/4}, u = q^{s1/4},
/// v = q^{s2/2} divided by (t^4 + 1)^kp (t^4 - 1)^km, i.e. by powers of
/// (1 + q) and (q - 1).
///
/// Canonical form: the denominator powers are minimal, so two scalars are
/// equal iff their stored representations are identical.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : num_(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class& c) : num_(c) {}
    explicit Scalar(LaurentPoly num, int kp = 0, int km = 0);

    /// q^{t/4} q^{u s1/4} q^{v s2/2}
    static Scalar unit(int t, int u = 0, int v = 0) { return Scalar(LaurentPoly::monomial(t, u, v)); }
    /// q^{e/4}
    static Scalar qq(int e) { return unit(e); }

    const LaurentPoly& numerator() const { return num_; }
    /// Power of (1 + q) in the denominator.
    int denom_power() const { return kp_; }
    /// Power of (q - 1) in the denominator.
    int denom_power_qm1() const { return km_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return kp_ == 0 && km_ == 0 && num_ == LaurentPoly(mpq_class(1)); }
    /// True when no u or v exponent is present.
    bool is_sigma_free() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse. Exists exactly when the numerator is a single
    /// term times powers of (t^4 + 1) and (t^4 - 1); throws otherwise.
    Scalar inverse() const;
    bool is_invertible() const;
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar pow(int n) const;

    /// Substitutes u -> t^{s1}, v -> t^{2 s2}, leaving a t-only scalar.
    Scalar specialize(int s1, int s2) const;

    bool operator==(const Scalar& o) const = default;

private:
    void normalize();

    LaurentPoly num_;
    int kp_ = 0;
    int km_ = 0;
};

/// Raised when an exponent of q does not land on the (t, u, v) lattice.
class UnrepresentableExponent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The canonical rational a/b.
inline mpq_class rational(long a, long b) {
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

/// Affine exponent c0 + c1 s1 + c2 s2 of q.
struct QExponent {
    mpq_class c0 = 0;
    mpq_class s1 = 0;
    mpq_class s2 = 0;

    QExponent operator+(const QExponent& o) const { return {c0 + o.c0, s1 + o.s1, s2 + o.s2}; }
    QExponent operator-() const { return {-c0, -s1, -s2}; }
    QExponent operator-(const QExponent& o) const { return *this + (-o); }
    QExponent operator*(const mpq_class& k) const { return {c0 * k, s1 * k, s2 * k}; }
    bool operator==(const QExponent& o) const = default;
};

/// Either fully symbolic s1, s2 or a specialized integer pair.
struct Sigma {
    std::optional<int> s1;
    std::optional<int> s2;

    static Sigma generic() { return {}; }
    static Sigma integers(int a, int b) { return {a, b}; }
    bool is_generic() const { return !s1.has_value(); }
    bool operator==(const Sigma&) const = default;
};

/// q raised to an affine exponent; throws UnrepresentableExponent when the
/// constant part is off the quarter lattice, the s1 part off quarters, or
/// the s2 part off halves.
Scalar q_power(const QExponent& e, const Sigma& sigma = Sigma::generic());

enum class Grain { Q, QHalf };

/// [m]_p = (p^m - p^-m) / (p - p^-1) with p = q (Grain::Q) or q^{1/2}.
Scalar quantum_integer(const QExponent& m, Grain grain, const Sigma& sigma = Sigma::generic());
inline Scalar quantum_integer(int m, Grain grain) { return quantum_integer(QExponent{m}, grain); }

}  // namespace qdress

#endif
