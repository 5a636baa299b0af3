#include "qdress/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "qdress/action.hpp"
#include "qdress/calgebra.hpp"
#include "qdress/expr.hpp"
#include "qdress/repmod.hpp"
#include "qdress/serialize.hpp"
#include "qdress/text.hpp"

namespace qdress {

namespace {

struct SigmaOption {
    std::string text;
    bool generic = false;

    Sigma resolve() const {
        if (text.empty()) return Sigma::generic();
        return parse_pair(text);
    }

    static Sigma parse_pair(const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--sigma expects s1,s2");
        std::size_t used1 = 0, used2 = 0;
        int a = 0, b = 0;
        try {
            a = std::stoi(s.substr(0, comma), &used1);
            b = std::stoi(s.substr(comma + 1), &used2);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("--sigma expects two integers, got '" + s + "'");
        }
        if (used1 != comma || used2 != s.size() - comma - 1)
            throw std::invalid_argument("--sigma expects two integers, got '" + s + "'");
        return Sigma::integers(a, b);
    }
};

void add_sigma(CLI::App* cmd, SigmaOption& opt) {
    auto* s = cmd->add_option("--sigma", opt.text, "integer pair s1,s2");
    auto* g = cmd->add_flag("--generic", opt.generic, "keep s1, s2 symbolic (default)");
    s->excludes(g);
}

std::string mode_name(const Sigma& s) {
    if (s.is_generic()) return "generic";
    return "sigma=" + std::to_string(*s.s1) + "," + std::to_string(*s.s2);
}

Json mode_json(const Sigma& s) {
    if (s.is_generic()) return "generic";
    return Json::array({*s.s1, *s.s2});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact U_q(so(5)) dressing-orbit representations"};
    app.name(args.empty() ? "qdress" : args[0]);
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    auto* normal = app.add_subcommand("normal-form", "print the normal form of an expression in w1..w4");
    std::string expr_text;
    normal->add_option("expr", expr_text, "expression")->required();

    auto* act = app.add_subcommand("act", "apply a generator word to an element");
    std::string word_arg, on_arg;
    SigmaOption act_sigma;
    act->add_option("--word", word_arg, "word such as \"E1 F2\"")->required();
    act->add_option("--on", on_arg, "expression acted on")->required();
    add_sigma(act, act_sigma);

    auto* phi = app.add_subcommand("phi", "evaluate phi on a word");
    std::string phi_word;
    SigmaOption phi_sigma;
    phi->add_option("--word", phi_word, "word")->required();
    add_sigma(phi, phi_sigma);

    auto* module = app.add_subcommand("module", "build the cyclic module U.1 for integer sigma");
    std::string module_sigma, out_path;
    std::size_t max_dim = 100;
    module->add_option("--sigma", module_sigma, "integer pair s1,s2")->required();
    module->add_option("--max-dim", max_dim, "dimension bound")->check(CLI::PositiveNumber);
    module->add_option("--out", out_path, "write the module as JSON to this file");

    auto* verify = app.add_subcommand("verify", "check the defining relations on monomials");
    int degree = 3;
    bool oracle = false;
    int mutate = -1;
    SigmaOption verify_sigma;
    verify->add_option("--degree", degree, "monomial degree bound")->check(CLI::NonNegativeNumber);
    add_sigma(verify, verify_sigma);
    verify->add_flag("--oracle", oracle, "also compare the closed form with the coproduct definition");
    verify->add_option("--mutate", mutate, "perturb action coefficient N before verifying (negative control)")
        ->check(CLI::NonNegativeNumber);
    bool list_sites = false;
    verify->add_flag("--list-sites", list_sites, "list the perturbable coefficients and exit");

    auto* dependent = app.add_subcommand("dependent", "print a dependent generator z_jk");
    int dj = 0, dk = 0;
    dependent->add_option("--j", dj, "row index")->required();
    dependent->add_option("--k", dk, "column index")->required();

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "emit JSON instead of text");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("qdress");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (normal->parsed()) {
            CElement v = evaluate_text(expr_text);
            if (json) out << to_json(v).dump(2) << "\n";
            else out << to_string(v) << "\n";
            return kExitOk;
        }
        if (act->parsed()) {
            ActionModel model(act_sigma.resolve());
            Word x = parse_word(word_arg);
            CElement f = evaluate_text(on_arg);
            if (!model.sigma().is_generic()) {
                CElement g;
                for (const auto& [m, c] : f.terms()) g.add_term(m, c.specialize(*model.sigma().s1, *model.sigma().s2));
                f = g;
            }
            CElement r = model.act_word(x, f);
            if (json) out << to_json(r).dump(2) << "\n";
            else out << to_string(r) << "\n";
            return kExitOk;
        }
        if (phi->parsed()) {
            ActionModel model(phi_sigma.resolve());
            CElement r = model.phi(parse_word(phi_word));
            if (json) out << to_json(r).dump(2) << "\n";
            else out << to_string(r) << "\n";
            return kExitOk;
        }
        if (module->parsed()) {
            Sigma s = SigmaOption::parse_pair(module_sigma);
            ModuleRealization m = build_cyclic_module(*s.s1, *s.s2, max_dim);
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw std::runtime_error("cannot open " + out_path);
                file << to_json(m).dump(2) << "\n";
            }
            if (json) {
                out << to_json(m).dump(2) << "\n";
                return kExitOk;
            }
            out << "dimension: " << m.dimension() << "\n";
            out << "lowest weight kernel dimension: " << lowest_weight_kernel_dimension(m) << "\n";
            out << "weights:";
            for (const auto& w : m.weights) out << " (" << w[0] << "," << w[1] << ")";
            out << "\n";
            for (std::size_t i = 0; i < m.basis.size(); ++i) out << "b" << i << " = " << to_string(m.basis[i]) << "\n";
            return kExitOk;
        }
        if (verify->parsed()) {
            Sigma s = verify_sigma.resolve();
            ActionModel model(s);
            auto sites = model.mutation_sites();
            if (list_sites) {
                for (std::size_t i = 0; i < sites.size(); ++i) out << i << " " << sites[i].label() << "\n";
                return kExitOk;
            }
            std::string mutation;
            if (mutate >= 0) {
                if (static_cast<std::size_t>(mutate) >= sites.size())
                    throw std::out_of_range("--mutate: there are " + std::to_string(sites.size()) + " sites");
                mutation = sites[static_cast<std::size_t>(mutate)].label();
                model = model.mutated(sites[static_cast<std::size_t>(mutate)]);
                oracle = true;
            }
            VerificationReport report = verify_relations(model, degree);
            std::vector<OracleMismatch> mismatches;
            if (oracle) mismatches = check_oracle(model, degree);
            bool ok = report.passed() && mismatches.empty();

            if (json) {
                Json j;
                j["degree"] = degree;
                j["mode"] = mode_json(s);
                if (!mutation.empty()) j["mutation"] = mutation;
                Json rels = Json::array();
                for (const auto& r : report.relations) {
                    Json e;
                    e["id"] = r.id;
                    e["tested"] = r.tested;
                    e["failures"] = r.failures;
                    rels.push_back(std::move(e));
                }
                j["relations"] = std::move(rels);
                if (oracle) j["oracle_mismatches"] = mismatches.size();
                j["passed"] = ok;
                out << j.dump(2) << "\n";
            } else {
                if (!mutation.empty()) out << "mutation: " << mutation << "\n";
                std::size_t passed = 0;
                for (const auto& r : report.relations) {
                    out << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.tested << " monomials";
                    if (!r.passed()) out << ", first failure on " << to_string(r.first_failure);
                    out << ")\n";
                    passed += r.passed() ? 1 : 0;
                }
                out << passed << "/" << report.relations.size() << " relations hold to degree " << degree << " ("
                    << mode_name(s) << ")\n";
                if (oracle) {
                    out << "oracle: " << mismatches.size() << " mismatches to degree " << degree << "\n";
                    for (const auto& mm : mismatches)
                        out << "  " << generator_name(mm.gen) << " on " << to_string(mm.monomial) << "\n";
                }
            }
            return ok ? kExitOk : kExitVerifyFailed;
        }
        if (dependent->parsed()) {
            CElement z = dependent_generator(dj, dk);
            if (json) out << to_json(z).dump(2) << "\n";
            else out << to_string(z) << "\n";
            return kExitOk;
        }
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBoundExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qdress
