#include <doctest.h>

#include "qdress/rational_function.hpp"
#include "qdress/scalar.hpp"
#include "support.hpp"

using namespace qdress;
using namespace qdress::testing;

namespace {

LaurentPoly tpoly(std::initializer_list<std::pair<int, int>> terms) {
    std::vector<LaurentPoly::Term> v;
    for (auto [e, c] : terms) v.emplace_back(Exp3{e, 0, 0}, mpq_class(c));
    return LaurentPoly::from_terms(v);
}

// (p^m - p^-m) / (p - p^-1) straight from the definition.
mpq_class q_integer_value(int m, const mpq_class& p) {
    mpq_class pm = 1;
    for (int i = 0; i < (m < 0 ? -m : m); ++i) pm *= p;
    if (m < 0) pm = 1 / pm;
    return (pm - 1 / pm) / (p - 1 / p);
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(1, Grain::Q) == Scalar(1));
    CHECK(quantum_integer(2, Grain::Q) == Scalar(tpoly({{4, 1}, {-4, 1}})));
    CHECK(quantum_integer(3, Grain::QHalf) == Scalar(tpoly({{4, 1}, {0, 1}, {-4, 1}})));
    CHECK(quantum_integer(0, Grain::Q).is_zero());
    for (int m = -7; m <= 7; ++m) {
        for (Grain g : {Grain::Q, Grain::QHalf}) {
            CHECK(quantum_integer(-m, g) == -quantum_integer(m, g));
            mpq_class x = rational(3, 2);
            mpq_class p = g == Grain::Q ? mpq_class(x * x * x * x) : mpq_class(x * x);
            CHECK(evaluate_at(quantum_integer(m, g), x) == q_integer_value(m, p));
        }
    }
}

TEST_CASE("symbolic quantum integers specialize to numeric ones") {
    for (int s = -4; s <= 4; ++s) {
        for (int n = -3; n <= 3; ++n) {
            Scalar a = quantum_integer(QExponent{n, 1, 0}, Grain::QHalf);
            CHECK(a.specialize(s, 0) == quantum_integer(n + s, Grain::QHalf));
            Scalar b = quantum_integer(QExponent{n, 0, -1}, Grain::Q);
            CHECK(b.specialize(0, s) == quantum_integer(n - s, Grain::Q));
            CHECK(quantum_integer(QExponent{n, 1, 0}, Grain::QHalf, Sigma::integers(s, 0)) ==
                  quantum_integer(n + s, Grain::QHalf));
        }
    }
}

TEST_CASE("q powers and the exponent lattice") {
    CHECK(q_power(QExponent{rational(1, 4)}) == Scalar::qq(1));
    CHECK(q_power(QExponent{0, rational(1, 4), 0}) == Scalar::unit(0, 1, 0));
    CHECK(q_power(QExponent{0, 0, rational(1, 2)}) == Scalar::unit(0, 0, 1));
    CHECK(q_power(QExponent{rational(1, 2), rational(-1, 4), 0}, Sigma::integers(2, 0)) == Scalar(1));
    CHECK_THROWS_AS(q_power(QExponent{rational(1, 3)}), UnrepresentableExponent);
    CHECK_THROWS_AS(q_power(QExponent{0, rational(1, 8), 0}), UnrepresentableExponent);
    CHECK_THROWS_AS(q_power(QExponent{0, 0, rational(1, 4)}), UnrepresentableExponent);
    CHECK_THROWS_AS(quantum_integer(QExponent{0, 0, rational(1, 2)}, Grain::QHalf), UnrepresentableExponent);
}

TEST_CASE("exact division by t^4 +- 1") {
    auto q = tpoly({{8, 1}, {0, -1}}).divide_t4(1);
    REQUIRE(q.has_value());
    CHECK(*q == tpoly({{4, 1}, {0, -1}}));
    CHECK_FALSE(tpoly({{8, 1}, {0, 1}}).divide_t4(1).has_value());
    CHECK(tpoly({{8, 1}, {0, -1}}).divide_t4(-1) == tpoly({{4, 1}, {0, 1}}));
    CHECK(t4_binomial_power(1, 2) == tpoly({{8, 1}, {4, 2}, {0, 1}}));
}

TEST_CASE("canonical denominators") {
    CHECK(Scalar(tpoly({{4, 1}, {0, 1}}), 1) == Scalar(1));
    Scalar a(tpoly({{8, 1}, {0, -1}}), 1, 1);
    CHECK(a.is_one());
    Scalar half = Scalar(LaurentPoly(mpq_class(1)), 1);
    CHECK(half.denom_power() == 1);
    CHECK(half + Scalar::qq(4) * half == Scalar(1));
    CHECK((half * Scalar(tpoly({{4, 1}, {0, 1}}))).is_one());
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        int s1 = uniform(rng, -3, 3), s2 = uniform(rng, -3, 3);
        CHECK((a + b).specialize(s1, s2) == a.specialize(s1, s2) + b.specialize(s1, s2));
        CHECK((a * b).specialize(s1, s2) == a.specialize(s1, s2) * b.specialize(s1, s2));
        // q = x^4 stays away from the poles at q = -1 and q = 1
        mpq_class x = rational(2 * uniform(rng, 1, 3) + 1, 2);
        CHECK(evaluate_at(a * b, x, s1, s2) == evaluate_at(a, x, s1, s2) * evaluate_at(b, x, s1, s2));
        CHECK(evaluate_at(a.specialize(s1, s2), x) == evaluate_at(a, x, s1, s2));
        CHECK(evaluate_at(specialize(a, s1, s2), x) == evaluate_at(a, x, s1, s2));
    }
}

TEST_CASE("inverses of units") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        Scalar u = random_unit(rng);
        REQUIRE(u.is_invertible());
        CHECK((u * u.inverse()).is_one());
    }
    CHECK_FALSE(Scalar(tpoly({{4, 1}, {0, 2}})).is_invertible());
    CHECK_THROWS(Scalar(0).inverse());
    CHECK(Scalar::qq(2).pow(-2) == Scalar::qq(-4));
}

TEST_CASE("rational functions") {
    RationalFunction t = RationalFunction::t_power(1);
    RationalFunction r = (t * t - 1) / (t - 1);
    CHECK(r == t + 1);
    CHECK(r.den() == UPoly(mpq_class(1)));
    RationalFunction s = RationalFunction(UPoly(std::vector<mpq_class>{2, 4}), UPoly(std::vector<mpq_class>{6, 2}));
    CHECK(s.den().lead() == 1);
    CHECK(s.den().coeffs()[0] != 0);
    CHECK(RationalFunction::t_power(-3) * RationalFunction::t_power(3) == RationalFunction(1));
    CHECK_THROWS(RationalFunction(0).inverse());
}

TEST_CASE("field axioms on random triples") {
    Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        mpq_class x = rational(uniform(rng, 2, 7), uniform(rng, 1, 3));
        if (defined_at(a, x) && defined_at(b, x)) CHECK(evaluate_at(a * b, x) == evaluate_at(a, x) * evaluate_at(b, x));
    }
}
