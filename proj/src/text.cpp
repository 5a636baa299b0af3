#include "qdress/text.hpp"

namespace qdress {

namespace {

std::string symbol_part(const mpq_class& a, const char* sym) {
    mpz_class p = a.get_num();
    mpz_class r = a.get_den();
    std::string out;
    if (p == 1) {
        out = sym;
    } else if (p == -1) {
        out = std::string("-") + sym;
    } else {
        out = p.get_str() + "*" + sym;
    }
    if (r != 1) out += "/" + r.get_str();
    return out;
}

std::string join_signed(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (i == 0) {
            out = p;
        } else if (!p.empty() && p[0] == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out;
}

std::string q_power_text(const QExponent& e) {
    if (e.s1 == 0 && e.s2 == 0 && e.c0.get_den() == 1) {
        if (e.c0 == 1) return "q";
        if (e.c0 > 0) return "q^" + e.c0.get_str();
    }
    return "q^(" + to_string(e) + ")";
}

std::string term_text(const mpq_class& c, const QExponent& e) {
    if (e == QExponent{}) return c.get_str();
    std::string qs = q_power_text(e);
    if (c == 1) return qs;
    if (c == -1) return "-" + qs;
    return c.get_str() + "*" + qs;
}

std::string laurent_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [e, c] : p.terms())
        parts.push_back(term_text(c, QExponent{rational(e.t, 4), rational(e.u, 4), rational(e.v, 2)}));
    return join_signed(parts);
}

std::string upoly_text(const UPoly& p, int shift) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const mpq_class& c = p.coeffs()[i];
        if (c == 0) continue;
        parts.push_back(term_text(c, QExponent{rational(static_cast<int>(i) + shift, 4)}));
    }
    return join_signed(parts);
}

std::string power_suffix(int k) { return k == 1 ? "" : "^" + std::to_string(k); }

}  // namespace

std::string to_string(const QExponent& e) {
    std::vector<std::string> parts;
    if (e.c0 != 0) parts.push_back(e.c0.get_str());
    if (e.s1 != 0) parts.push_back(symbol_part(e.s1, "s1"));
    if (e.s2 != 0) parts.push_back(symbol_part(e.s2, "s2"));
    if (parts.empty()) return "0";
    return join_signed(parts);
}

std::string to_string(const Scalar& s) {
    std::string num = laurent_text(s.numerator());
    if (s.denom_power() == 0 && s.denom_power_qm1() == 0) return num;
    std::string out = "(" + num + ")";
    if (s.denom_power() > 0) out += "/(1+q)" + power_suffix(s.denom_power());
    if (s.denom_power_qm1() > 0) out += "/(q-1)" + power_suffix(s.denom_power_qm1());
    return out;
}

std::string to_string(const RationalFunction& r) {
    std::string num = upoly_text(r.num(), r.shift());
    if (r.den() == UPoly(mpq_class(1))) return num;
    return "(" + num + ")/(" + upoly_text(r.den(), 0) + ")";
}

std::string to_string(const Monomial& m) {
    if (m == Monomial::unit()) return "1";
    std::string out;
    for (int j = 1; j <= 4; ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += " ";
        out += "w" + std::to_string(j);
        if (m[j] > 1) out += "^" + std::to_string(m[j]);
    }
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Gen& g : w.letters()) {
        if (!out.empty()) out += " ";
        out += generator_name(g);
    }
    return out;
}

}  // namespace qdress
