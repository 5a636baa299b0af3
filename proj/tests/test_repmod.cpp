#include <doctest.h>

#include "qdress/repmod.hpp"
#include "qdress/serialize.hpp"
#include "support.hpp"

using namespace qdress;
using namespace qdress::testing;

namespace {

Monomial mono(int a, int b, int c, int d) { return Monomial{{a, b, c, d}}; }

RationalFunction rf(const Scalar& s) { return to_rational_function(s); }

// Known spanning vectors for sigma = (1, 0).
std::vector<RVector> reference_vectors() {
    const RationalFunction q = RationalFunction::t_power(4);
    std::vector<RVector> v(4);
    v[0].add_term(Monomial::unit(), 1);
    v[1].add_term(mono(0, 0, 0, 1), 1);
    v[2].add_term(mono(0, 1, 0, 0), 1);
    v[2].add_term(mono(1, 0, 0, 1), -q);
    v[3].add_term(mono(0, 0, 1, 0), q + 1);
    v[3].add_term(mono(0, 1, 0, 1), RationalFunction::t_power(6));
    return v;
}

RVector apply(const ActionModel& am, const Gen& g, const RVector& v) {
    RVector out;
    for (const auto& [m, c] : v.terms())
        for (const CElement img = am.act_closed(g, m); const auto& [p, s] : img.terms()) out.add_term(p, rf(s) * c);
    return out;
}

const ModuleRealization& module_10() {
    static const ModuleRealization m = build_cyclic_module(1, 0, 100);
    return m;
}

}  // namespace

TEST_CASE("four-dimensional module") {
    const ModuleRealization& m = module_10();
    REQUIRE(m.dimension() == 4);
    CHECK(m.basis[0] == RVector(Monomial::unit(), RationalFunction(1)));
    for (const RVector& v : reference_vectors()) CHECK(reduce_against(m, v).is_zero());
    // and the reference vectors are independent, so the spans coincide
    RMatrix coords;
    for (const RVector& v : reference_vectors()) {
        std::vector<RationalFunction> row;
        for (const Monomial& p : m.pivots) row.push_back(v.coeff(p));
        coords.push_back(row);
    }
    CHECK(rank(coords) == 4);
    CHECK(weight_decomposition(m).size() == 4);
}

TEST_CASE("trivial and vector modules") {
    ModuleRealization triv = build_cyclic_module(0, 0, 10);
    CHECK(triv.dimension() == 1);
    CHECK(triv.weights[0] == std::array<int, 2>{0, 0});
    ModuleRealization vec = build_cyclic_module(0, 1, 100);
    CHECK(vec.dimension() == 5);
    CHECK(weight_decomposition(vec).size() == 5);
    CHECK(build_cyclic_module(2, 0, 100).dimension() == 10);
}

TEST_CASE("matrices reproduce the action") {
    for (auto [s1, s2] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
        ModuleRealization m = build_cyclic_module(s1, s2, 100);
        ActionModel am(Sigma::integers(s1, s2));
        for (const auto& [name, g] : named_generators()) {
            const RMatrix& mat = m.matrices.at(name);
            for (std::size_t i = 0; i < m.dimension(); ++i) {
                RVector expected;
                for (std::size_t j = 0; j < m.dimension(); ++j) expected += m.basis[j].scaled(mat[j][i]);
                CHECK(apply(am, g, m.basis[i]) == expected);
            }
        }
    }
}

TEST_CASE("lowest weight structure") {
    for (auto [s1, s2] : {std::pair{1, 0}, {0, 1}, {2, 0}, {1, 1}}) {
        ModuleRealization m = build_cyclic_module(s1, s2, 100);
        for (const char* cartan : {"qH1", "qH2"}) {
            const RMatrix& h = m.matrices.at(cartan);
            for (std::size_t i = 0; i < m.dimension(); ++i)
                for (std::size_t j = 0; j < m.dimension(); ++j)
                    if (i != j) CHECK(h[i][j].is_zero());
        }
        for (const char* lower : {"F1", "F2"})
            for (std::size_t j = 0; j < m.dimension(); ++j) CHECK(m.matrices.at(lower)[j][0].is_zero());
        CHECK(lowest_weight_kernel_dimension(m) == 1);
        CHECK(lowest_weight_is_minimal(m));
        CHECK(m.matrices.at("qH1")[0][0] == RationalFunction::t_power(-2 * s1));
        CHECK(m.matrices.at("qH2")[0][0] == RationalFunction::t_power(-4 * s2));
    }
}

TEST_CASE("relation matrices vanish") {
    for (auto [s1, s2] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
        ModuleRealization m = build_cyclic_module(s1, s2, 100);
        for (const auto& r : defining_relations()) CHECK(is_zero_matrix(element_matrix(m, r.element)));
    }
}

TEST_CASE("dimensions follow the Weyl formula") {
    CHECK(weyl_dimension(1, 0) == 4);
    CHECK(weyl_dimension(0, 1) == 5);
    CHECK(weyl_dimension(1, 1) == 16);
    for (int s1 = 0; s1 <= 4; ++s1)
        for (int s2 = 0; s2 <= 3; ++s2) {
            long d = weyl_dimension(s1, s2);
            if (d > 50) continue;
            CAPTURE(s1);
            CAPTURE(s2);
            CHECK(static_cast<long>(build_cyclic_module(s1, s2, 60).dimension()) == d);
        }
}

TEST_CASE("bound exceeded") {
    CHECK_THROWS_AS(build_cyclic_module(-1, 0, 20), BoundExceeded);
    CHECK_THROWS_AS(build_cyclic_module(1, 0, 3), BoundExceeded);
    CHECK_THROWS_AS(build_cyclic_module(1, 0, 0), std::invalid_argument);
}

TEST_CASE("module export is deterministic and round-trips") {
    const std::string a = to_json(build_cyclic_module(1, 1, 100)).dump(2);
    const std::string b = to_json(build_cyclic_module(1, 1, 100)).dump(2);
    CHECK(a == b);
    ModuleRealization back = module_from_json(Json::parse(a));
    CHECK(to_json(back).dump(2) == a);
    CHECK(back.pivots == build_cyclic_module(1, 1, 100).pivots);
}

TEST_CASE("relation verification") {
    VerificationReport r = verify_relations(2, Sigma::generic());
    CHECK(r.passed());
    CHECK(r.relations.size() == 17);
    CHECK(verify_relations(0, Sigma::generic()).passed());
    CHECK(verify_relations(3, Sigma::integers(2, 1)).passed());

    // q -> q^2 in the ladder relation
    ActionModel am(Sigma::generic());
    const Scalar q2 = Scalar::qq(8);
    UElement bad = (UElement(Word{Gen::raise(1), Gen::lower(1)}) - UElement(Word{Gen::lower(1), Gen::raise(1)}))
                       .scaled(q2 - q2.inverse()) -
                   UElement(Word{Gen::qH(1)}) + UElement(Word{Gen::cartan(1, -2)});
    CHECK_FALSE(am.act(bad, CElement(Scalar(1))).is_zero());
}
