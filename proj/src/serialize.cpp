#include "qdress/serialize.hpp"

#include <stdexcept>

namespace qdress {

namespace {

Json monomial_json(const Monomial& m) { return Json::array({m[1], m[2], m[3], m[4]}); }

Monomial monomial_from(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("monomial must be an array of 4 integers");
    Monomial m;
    for (std::size_t i = 0; i < 4; ++i) {
        m.n[i] = j[i].get<int>();
        if (m.n[i] < 0) throw std::invalid_argument("negative monomial exponent");
    }
    return m;
}

Json upoly_json(const UPoly& p, int shift) {
    Json out = Json::array();
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        Json t;
        t["t_exp"] = static_cast<int>(i) + shift;
        t["coeff"] = p.coeffs()[i].get_str();
        out.push_back(std::move(t));
    }
    return out;
}

LaurentPoly t_terms_from(const Json& arr) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : arr) terms.emplace_back(Exp3{t.at("t_exp").get<int>(), 0, 0}, mpq_class(t.at("coeff").get<std::string>()));
    for (auto& [e, c] : terms) c.canonicalize();
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

Json to_json(const Scalar& s) {
    Json out;
    Json terms = Json::array();
    for (const auto& [e, c] : s.numerator().terms()) {
        Json t;
        t["t_exp"] = e.t;
        t["u_exp"] = e.u;
        t["v_exp"] = e.v;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    out["denom_power"] = s.denom_power();
    out["denom_power_qm1"] = s.denom_power_qm1();
    return out;
}

Json to_json(const RationalFunction& r) {
    Json out;
    out["num"] = upoly_json(r.num(), r.shift());
    out["den"] = upoly_json(r.den(), 0);
    return out;
}

Json to_json(const CElement& e) {
    Json out = Json::array();
    for (const auto& [m, c] : e.terms()) {
        Json t;
        t["monomial"] = monomial_json(m);
        t["coeff"] = to_json(c);
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const RVector& e) {
    Json out = Json::array();
    for (const auto& [m, c] : e.terms()) {
        Json t;
        t["monomial"] = monomial_json(m);
        t["coeff"] = to_json(c);
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const ModuleRealization& m) {
    Json out;
    out["sigma"] = Json::array({m.sigma1, m.sigma2});
    out["dimension"] = m.dimension();
    Json basis = Json::array();
    for (const auto& b : m.basis) basis.push_back(to_json(b));
    out["basis"] = std::move(basis);
    Json weights = Json::array();
    for (const auto& w : m.weights) weights.push_back(Json::array({w[0], w[1]}));
    out["weights"] = std::move(weights);
    Json mats;
    for (const auto& [name, g] : named_generators()) {
        Json rows = Json::array();
        for (const auto& row : m.matrices.at(name)) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(to_json(x));
            rows.push_back(std::move(r));
        }
        mats[name] = std::move(rows);
    }
    out["matrices"] = std::move(mats);
    return out;
}

Scalar scalar_from_json(const Json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
        mpq_class c(t.at("coeff").get<std::string>());
        c.canonicalize();
        terms.emplace_back(Exp3{t.at("t_exp").get<int>(), t.at("u_exp").get<int>(), t.at("v_exp").get<int>()}, c);
    }
    int kp = j.value("denom_power", 0);
    int km = j.value("denom_power_qm1", 0);
    return Scalar(LaurentPoly::from_terms(std::move(terms)), kp, km);
}

RationalFunction rational_function_from_json(const Json& j) {
    LaurentPoly den = t_terms_from(j.at("den"));
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    return RationalFunction::from_laurent(t_terms_from(j.at("num"))) / RationalFunction::from_laurent(den);
}

ModuleRealization module_from_json(const Json& j) {
    ModuleRealization m;
    m.sigma1 = j.at("sigma").at(0).get<int>();
    m.sigma2 = j.at("sigma").at(1).get<int>();
    for (const auto& b : j.at("basis")) {
        RVector v;
        for (const auto& t : b) v.add_term(monomial_from(t.at("monomial")), rational_function_from_json(t.at("coeff")));
        if (v.is_zero()) throw std::invalid_argument("zero basis vector");
        m.pivots.push_back(v.terms().begin()->first);
        m.basis.push_back(std::move(v));
    }
    for (const auto& w : j.at("weights")) m.weights.push_back({w.at(0).get<int>(), w.at(1).get<int>()});
    const std::size_t d = m.basis.size();
    if (j.at("dimension").get<std::size_t>() != d) throw std::invalid_argument("dimension does not match basis");
    for (const auto& [name, g] : named_generators()) {
        RMatrix mat;
        for (const auto& row : j.at("matrices").at(name)) {
            std::vector<RationalFunction> r;
            for (const auto& x : row) r.push_back(rational_function_from_json(x));
            if (r.size() != d) throw std::invalid_argument("matrix row has wrong length");
            mat.push_back(std::move(r));
        }
        if (mat.size() != d) throw std::invalid_argument("matrix has wrong number of rows");
        m.matrices.emplace(name, std::move(mat));
    }
    return m;
}

}  // namespace qdress
