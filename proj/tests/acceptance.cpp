// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "qdress/action.hpp"
#include "qdress/cli.hpp"
#include "qdress/repmod.hpp"
#include "qdress/serialize.hpp"
#include "support.hpp"

using namespace qdress;
using namespace qdress::testing;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Monomial mono(int a, int b, int c, int d) { return Monomial{{a, b, c, d}}; }

const std::vector<std::pair<int, int>> kSigmaTable = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};

ModuleRealization module_via_cli(int s1, int s2) {
    std::ostringstream out, err;
    int code = run_cli({"qdress", "module", "--json", "--sigma", std::to_string(s1) + "," + std::to_string(s2)}, out, err);
    if (code != kExitOk) throw std::runtime_error("module command failed: " + err.str());
    return module_from_json(Json::parse(out.str()));
}

Outcome worked_example() {
    ModuleRealization m = module_via_cli(1, 0);
    if (m.dimension() != 4) return {false, "dimension " + std::to_string(m.dimension())};
    const RationalFunction q = RationalFunction::t_power(4);
    std::vector<RVector> expected(4);
    expected[0].add_term(Monomial::unit(), 1);
    expected[1].add_term(mono(0, 0, 0, 1), 1);
    expected[2].add_term(mono(0, 1, 0, 0), 1);
    expected[2].add_term(mono(1, 0, 0, 1), -q);
    expected[3].add_term(mono(0, 0, 1, 0), q + 1);
    expected[3].add_term(mono(0, 1, 0, 1), RationalFunction::t_power(6));
    RMatrix coords;
    for (const RVector& v : expected) {
        if (!reduce_against(m, v).is_zero()) return {false, "an expected vector is outside the span"};
        std::vector<RationalFunction> row;
        for (const Monomial& p : m.pivots) row.push_back(v.coeff(p));
        coords.push_back(row);
    }
    if (rank(coords) != 4) return {false, "expected vectors do not span the module"};
    return {true, "dimension 4, spans agree"};
}

Outcome generic_relations() {
    VerificationReport r = verify_relations(4, Sigma::generic());
    std::size_t tested = 0;
    for (const auto& rel : r.relations) {
        tested += rel.tested;
        if (!rel.passed()) return {false, rel.id + " fails"};
    }
    return {true, std::to_string(r.relations.size()) + " relations, " + std::to_string(tested) + " monomial checks"};
}

Outcome oracle() {
    auto mm = check_oracle(ActionModel(Sigma::generic()), 4);
    if (!mm.empty()) return {false, std::to_string(mm.size()) + " mismatches"};
    return {true, "closed form = definition on degree <= 4"};
}

Outcome phi_conditions() {
    ActionModel am(Sigma::generic());
    for (const auto& r : defining_relations())
        if (!am.phi(r.element).is_zero()) return {false, "phi(" + r.id + ") != 0"};
    std::vector<Gen> alphabet;
    for (const auto& [name, g] : named_generators()) alphabet.push_back(g);
    std::vector<Word> words{Word{}};
    std::size_t checked = 0;
    for (int len = 1; len <= 3; ++len) {
        std::vector<Word> next;
        for (const Word& w : words) {
            for (const Gen& g : alphabet) {
                Word x = w * Word{g};
                if (am.act_word(x, CElement(Scalar(1))) != am.phi(x)) return {false, "act(x, 1) != phi(x)"};
                ++checked;
                next.push_back(x);
            }
        }
        words = std::move(next);
    }
    return {true, "17 relations, " + std::to_string(checked) + " words"};
}

Outcome leibniz() {
    ActionModel am(Sigma::generic());
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        CElement f = random_element(rng, 3), g = random_element(rng, 3);
        CElement fg = f * g;
        for (const auto& [name, x] : named_generators()) {
            CElement xi_rhs, act_rhs;
            for (const TensorSum d = coproduct(x); const auto& [p, c] : d.terms()) {
                CElement left = am.xi(p.first, f);
                xi_rhs += (left * am.xi(p.second, g)).scaled(c);
                act_rhs += (left * am.act_word(p.second, g)).scaled(c);
            }
            if (am.xi(x, fg) != xi_rhs) return {false, "dressing Leibniz fails for " + name};
            if (am.act_closed(x, fg) != act_rhs) return {false, "action Leibniz fails for " + name};
        }
    }
    return {true, "200 pairs x 6 generators"};
}

Outcome associativity() {
    auto ms = monomials_up_to(3);
    std::size_t n = 0;
    for (const auto& a : ms)
        for (const auto& b : ms)
            for (const auto& c : ms) {
                CElement x(a, Scalar(1)), y(b, Scalar(1)), z(c, Scalar(1));
                if ((x * y) * z != x * (y * z)) return {false, "non-associative triple"};
                ++n;
            }
    Rng rng(2025);
    for (int i = 0; i < 500; ++i) {
        CElement x(random_monomial(rng, 6), Scalar(1)), y(random_monomial(rng, 6), Scalar(1)),
            z(random_monomial(rng, 6), Scalar(1));
        if ((x * y) * z != x * (y * z)) return {false, "non-associative random triple"};
    }
    return {true, std::to_string(n) + " exhaustive + 500 random triples"};
}

Outcome dimensions() {
    std::string detail;
    for (auto [s1, s2] : kSigmaTable) {
        std::size_t d = build_cyclic_module(s1, s2, 100).dimension();
        long weyl = weyl_dimension(s1, s2);
        detail += "(" + std::to_string(s1) + "," + std::to_string(s2) + ")=" + std::to_string(d) + " ";
        if (static_cast<long>(d) != weyl) return {false, detail + "!= Weyl " + std::to_string(weyl)};
    }
    if (build_cyclic_module(1, 0, 100).dimension() != 4) return {false, "(1,0) is not four-dimensional"};
    detail.pop_back();
    return {true, detail};
}

Outcome relation_matrices() {
    for (auto [s1, s2] : kSigmaTable) {
        ModuleRealization m = module_via_cli(s1, s2);
        for (const auto& r : defining_relations())
            if (!is_zero_matrix(element_matrix(m, r.element)))
                return {false, r.id + " at (" + std::to_string(s1) + "," + std::to_string(s2) + ")"};
    }
    return {true, "17 relations x 6 exported modules"};
}

Outcome mutations() {
    ActionModel base(Sigma::generic());
    auto sites = base.mutation_sites();
    if (sites.size() < 10) return {false, "only " + std::to_string(sites.size()) + " sites"};
    for (const auto& site : sites) {
        ActionModel m = base.mutated(site);
        bool caught = !verify_relations(m, 4, true).passed() || !check_oracle(m, 4, true).empty();
        if (!caught) return {false, site.label() + " survives"};
    }
    return {true, std::to_string(sites.size()) + " single-site mutations all detected"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 worked example (sigma = 1,0)", worked_example},
        {"2 generic relation verification", generic_relations},
        {"3 oracle equivalence", oracle},
        {"4 phi conditions", phi_conditions},
        {"5 Leibniz properties", leibniz},
        {"6 basis / confluence", associativity},
        {"7 dimension table", dimensions},
        {"8 relation matrices vanish", relation_matrices},
        {"9 negative control", mutations},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-34s %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
