#ifndef QDRESS_RATIONAL_FUNCTION_HPP
#define QDRESS_RATIONAL_FUNCTION_HPP

#include <vector>

#include <gmpxx.h>

#include "qdress/scalar.hpp"

namespace qdress {

/// Dense univariate polynomial in t over Q; coeffs[i] multiplies t^i.
/// The leading coefficient is nonzero (the zero polynomial is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> coeffs);
    explicit UPoly(const mpq_class& c);

    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& lead() const { return c_.back(); }
    /// Number of trailing zero coefficients (the t-adic valuation).
    int valuation() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const mpq_class& k) const;
    UPoly operator-() const;

    UPoly shifted_up(int n) const;    // * t^n
    UPoly shifted_down(int n) const;  // / t^n, requires valuation >= n
    UPoly monic() const;

    /// Quotient and remainder of Euclidean division.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
    static UPoly gcd(UPoly a, UPoly b);

    bool operator==(const UPoly&) const = default;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Element of Q(t): t^shift * num / den, with den monic and den(0) != 0,
/// num(0) != 0 unless zero, and gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(mpq_class(1)) {}
    RationalFunction(long c) : RationalFunction(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
    explicit RationalFunction(const mpq_class& c);
    /// t^shift * num / den (any representation; normalized on construction).
    RationalFunction(UPoly num, UPoly den, int shift = 0);

    static RationalFunction t_power(int e);
    /// Converts a t-only Laurent polynomial.
    static RationalFunction from_laurent(const LaurentPoly& p);

    /// Numerator as a Laurent polynomial t^shift * num.
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    int shift() const { return shift_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_ == UPoly(mpq_class(1)) && den_ == UPoly(mpq_class(1)); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction inverse() const;

    bool operator==(const RationalFunction&) const = default;

private:
    void normalize();

    UPoly num_;
    UPoly den_;
    int shift_ = 0;
};

/// Substitutes u -> t^{s1}, v -> t^{2 s2} and divides out the denominator.
RationalFunction specialize(const Scalar& s, int s1, int s2);
/// Conversion of a scalar that has no u, v dependence.
RationalFunction to_rational_function(const Scalar& s);

}  // namespace qdress

#endif
