#include "qdress/freeu.hpp"

#include <stdexcept>

namespace qdress {

const std::vector<std::pair<std::string, Gen>>& named_generators() {
    static const std::vector<std::pair<std::string, Gen>> gens = {
        {"qH1", Gen::qH(1)},    {"qH2", Gen::qH(2)},    {"E1", Gen::raise(1)},
        {"E2", Gen::raise(2)},  {"F1", Gen::lower(1)},  {"F2", Gen::lower(2)},
    };
    return gens;
}

std::string generator_name(const Gen& g) {
    std::string i = std::to_string(g.index);
    switch (g.kind) {
        case Gen::Kind::Raise: return "E" + i;
        case Gen::Kind::Lower: return "F" + i;
        case Gen::Kind::Cartan:
            if (g.k == 2) return "qH" + i;
            if (g.k == -2) return "qH" + i + "^-1";
            if (g.k == 1) return "K" + i;
            return "K" + i + "^" + std::to_string(g.k);
    }
    return "?";
}

Word::Word(std::initializer_list<Gen> letters) {
    for (const Gen& g : letters) push_back(g);
}

Word::Word(const std::vector<Gen>& letters) {
    for (const Gen& g : letters) push_back(g);
}

void Word::push_back(const Gen& g) {
    if (g.index != 1 && g.index != 2) throw std::out_of_range("generator index must be 1 or 2");
    if (g.is_cartan()) {
        if (g.k == 0) return;
        if (!letters_.empty() && letters_.back().is_cartan() && letters_.back().index == g.index) {
            letters_.back().k += g.k;
            if (letters_.back().k == 0) letters_.pop_back();
            return;
        }
        letters_.push_back(g);
        return;
    }
    letters_.push_back(Gen{g.kind, g.index, 0});
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    for (const Gen& g : b.letters_) out.push_back(g);
    return out;
}

void UElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UElement& UElement::operator+=(const UElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

UElement& UElement::operator-=(const UElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

UElement operator*(const UElement& a, const UElement& b) {
    UElement out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
}

UElement UElement::scaled(const Scalar& s) const {
    UElement out;
    for (const auto& [w, c] : terms_) out.add_term(w, c * s);
    return out;
}

void TensorSum::add_term(const Word& left, const Word& right, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorSum operator*(const TensorSum& a, const TensorSum& b) {
    TensorSum out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return out;
}

TensorSum coproduct(const Gen& g) {
    TensorSum out;
    if (g.is_cartan()) {
        out.add_term(Word{g}, Word{g}, Scalar(1));
        return out;
    }
    // X (x) q^{-H_i/2} + q^{H_i/2} (x) X
    out.add_term(Word{g}, Word{Gen::cartan(g.index, -1)}, Scalar(1));
    out.add_term(Word{Gen::cartan(g.index, 1)}, Word{g}, Scalar(1));
    return out;
}

TensorSum coproduct(const Word& w) {
    TensorSum acc;
    acc.add_term(Word{}, Word{}, Scalar(1));
    for (const Gen& g : w.letters()) acc = acc * coproduct(g);
    return acc;
}

TensorSum coproduct(const UElement& x) {
    TensorSum out;
    for (const auto& [w, c] : x.terms()) {
        for (const TensorSum delta = coproduct(w); const auto& [k, d] : delta.terms()) out.add_term(k.first, k.second, c * d);
    }
    return out;
}

Scalar counit(const Word& w) {
    for (const Gen& g : w.letters())
        if (!g.is_cartan()) return Scalar(0);
    return Scalar(1);
}

namespace {

std::vector<Relation> build_relations() {
    const Scalar q = Scalar::qq(4);
    const Scalar qi = Scalar::qq(-4);
    auto W = [](std::initializer_list<Gen> gs) { return UElement(Word(gs)); };
    auto X = [](int i, int sign) { return sign > 0 ? Gen::raise(i) : Gen::lower(i); };

    std::vector<Relation> rels;
    rels.push_back({"cartan", W({Gen::qH(1), Gen::qH(2)}) - W({Gen::qH(2), Gen::qH(1)})});

    // q^{H_i} X_j^{+-} = q^{c} X_j^{+-} q^{H_i}; c = (+-1, -+1; -+1, +-2) for (i, j).
    const int weight[2][2] = {{1, -1}, {-1, 2}};
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            for (int sign : {1, -1}) {
                int c = sign * weight[i - 1][j - 1];
                std::string id = "weight_H" + std::to_string(i) + (sign > 0 ? "_E" : "_F") + std::to_string(j);
                rels.push_back({id, W({Gen::qH(i), X(j, sign)}) - W({X(j, sign), Gen::qH(i)}).scaled(Scalar::qq(4 * c))});
            }
        }
    }

    // (q - q^{-1}) [X_i^+, X_i^-] - q^{H_i} + q^{-H_i}
    for (int i = 1; i <= 2; ++i) {
        UElement comm = W({Gen::raise(i), Gen::lower(i)}) - W({Gen::lower(i), Gen::raise(i)});
        rels.push_back({"ladder_" + std::to_string(i),
                        comm.scaled(q - qi) - W({Gen::qH(i)}) + W({Gen::cartan(i, -2)})});
    }

    rels.push_back({"mixed_E1F2", W({Gen::raise(1), Gen::lower(2)}) - W({Gen::lower(2), Gen::raise(1)})});
    rels.push_back({"mixed_E2F1", W({Gen::raise(2), Gen::lower(1)}) - W({Gen::lower(1), Gen::raise(2)})});

    const Scalar two = qi + q;
    const Scalar three = qi + Scalar(1) + q;
    for (int sign : {1, -1}) {
        Gen a = X(1, sign);
        Gen b = X(2, sign);
        std::string s = sign > 0 ? "E" : "F";
        rels.push_back({"serre_cubic_" + s, W({b, b, a}) - W({b, a, b}).scaled(two) + W({a, b, b})});
    }
    for (int sign : {1, -1}) {
        Gen a = X(1, sign);
        Gen b = X(2, sign);
        std::string s = sign > 0 ? "E" : "F";
        rels.push_back({"serre_quartic_" + s, W({a, a, a, b}) - W({a, a, b, a}).scaled(three) +
                                                 W({a, b, a, a}).scaled(three) - W({b, a, a, a})});
    }
    return rels;
}

}  // namespace

const std::vector<Relation>& defining_relations() {
    static const std::vector<Relation> rels = build_relations();
    return rels;
}

}  // namespace qdress
