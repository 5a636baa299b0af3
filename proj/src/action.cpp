#include "qdress/action.hpp"

#include <stdexcept>

namespace qdress {

namespace {

Monomial mono(int a, int b, int c, int d) { return Monomial{{a, b, c, d}}; }

CElement term(const Monomial& m, const Scalar& c) { return CElement(m, c); }

const Scalar& inv_one_plus_q() {
    static const Scalar s(LaurentPoly(mpq_class(1)), 1);
    return s;
}

std::size_t ladder_slot(const Gen& g) {
    if (g.is_cartan()) throw std::logic_error("Cartan letters have no table row");
    return g.kind == Gen::Kind::Raise ? 0 : 1;
}

}  // namespace

const CElement& XiTable::at(const Gen& g, int j) const {
    return images[ladder_slot(g)][static_cast<std::size_t>(g.index - 1)][static_cast<std::size_t>(j - 1)];
}

CElement& XiTable::at(const Gen& g, int j) {
    return images[ladder_slot(g)][static_cast<std::size_t>(g.index - 1)][static_cast<std::size_t>(j - 1)];
}

XiTable standard_xi_table() {
    XiTable t;
    const Gen e1 = Gen::raise(1), e2 = Gen::raise(2), f1 = Gen::lower(1), f2 = Gen::lower(2);

    t.at(e1, 1) = term(mono(0, 1, 0, 0), -Scalar::qq(-2));
    t.at(e1, 2) = term(mono(0, 0, 1, 0), Scalar::qq(-2));
    t.at(e1, 3) = CElement{};
    t.at(e1, 4) = term(mono(0, 0, 0, 2), Scalar::qq(2) * inv_one_plus_q());

    t.at(e2, 1) = term(mono(2, 0, 0, 0), Scalar::qq(-2));
    t.at(e2, 2) = term(mono(1, 1, 0, 0), Scalar(1));
    t.at(e2, 3) = term(mono(0, 2, 0, 0), -inv_one_plus_q());
    t.at(e2, 4) = term(mono(1, 0, 0, 1), -Scalar::qq(-4)) + term(mono(0, 1, 0, 0), Scalar::qq(-8));

    t.at(f1, 1) = CElement{};
    t.at(f1, 2) = term(mono(1, 0, 0, 0), -Scalar::qq(2));
    t.at(f1, 3) = term(mono(0, 1, 0, 0), Scalar::qq(2));
    t.at(f1, 4) = term(Monomial::unit(), Scalar(-1));

    t.at(f2, 1) = term(Monomial::unit(), -Scalar::qq(2));
    return t;
}

XiTable uncorrected_xi_table() {
    XiTable t = standard_xi_table();
    const Gen f1 = Gen::lower(1);
    t.at(f1, 2) = term(mono(0, 1, 0, 0), -Scalar::qq(2));
    t.at(f1, 3) = term(mono(0, 0, 1, 0), Scalar::qq(2));
    return t;
}

std::string MutationSite::label() const {
    std::string s;
    switch (table) {
        case Table::Xi: s = "xi(" + generator_name(gen) + ")w" + std::to_string(slot); break;
        case Table::Phi: s = "phi(" + generator_name(gen) + ")"; break;
        case Table::Closed: s = "closed(" + generator_name(gen) + ")#" + std::to_string(slot); break;
    }
    if (table != Table::Closed) {
        s += "[";
        for (int j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string(term.n[static_cast<std::size_t>(j)]);
        s += "]";
    }
    return s;
}

ActionModel::ActionModel(Sigma sigma) : ActionModel(sigma, standard_xi_table()) {}

ActionModel::ActionModel(Sigma sigma, XiTable xi)
    : sigma_(sigma), xi_(std::move(xi)), cache_(std::make_shared<Cache>()) {
    // phi(X_1^+) = -q^{1/2 - s1/4} [s1]_{q^{1/2}} / (1 + q) w4
    Scalar c1 = -(qp(mpq_class(1, 2), mpq_class(-1, 4)) * inv_one_plus_q() *
                  qint(QExponent{0, 1, 0}, Grain::QHalf));
    // phi(X_2^+) = -q^{-(1 + s2)/2} [s2]_q w1
    Scalar c2 = -(qp(mpq_class(-1, 2), 0, mpq_class(-1, 2)) * qint(QExponent{0, 0, 1}, Grain::Q));
    phi_.raise[0] = term(mono(0, 0, 0, 1), c1);
    phi_.raise[1] = term(mono(1, 0, 0, 0), c2);
}

Scalar ActionModel::qp(const mpq_class& c0, const mpq_class& s1, const mpq_class& s2) const {
    return q_power(QExponent{c0, s1, s2}, sigma_);
}

Scalar ActionModel::qint(const QExponent& m, Grain grain) const { return quantum_integer(m, grain, sigma_); }

CElement ActionModel::phi(const Gen& g) const {
    switch (g.kind) {
        case Gen::Kind::Lower: return {};
        case Gen::Kind::Raise: return phi_.raise[static_cast<std::size_t>(g.index - 1)];
        case Gen::Kind::Cartan: {
            // phi(q^{k H_1/2}) = q^{-k s1/4}, phi(q^{k H_2/2}) = q^{-k s2/2}
            Scalar v = g.index == 1 ? qp(0, rational(-g.k, 4), 0) : qp(0, 0, rational(-g.k, 2));
            return CElement(v);
        }
    }
    return {};
}

CElement ActionModel::xi_monomial(const Gen& g, const Monomial& m) const {
    if (g.is_cartan()) {
        auto wt = monomial_weight(m);
        int e = wt[static_cast<std::size_t>(g.index - 1)];
        // (k/2)-th power of q^{e}
        return CElement(m, Scalar::qq(2 * g.k * e));
    }
    if (m == Monomial::unit()) return {};  // xi_x 1 = eps(x) 1
    {
        std::lock_guard lock(cache_->mu);
        auto it = cache_->xi.find({g, m});
        if (it != cache_->xi.end()) return it->second;
    }
    int j = 1;
    while (m[j] == 0) ++j;
    Monomial rest = m;
    rest.n[static_cast<std::size_t>(j - 1)] -= 1;

    CElement out;
    if (rest == Monomial::unit()) {
        out = xi_.at(g, j);
    } else {
        // xi_g(w_j rest) = sum over Delta g = a (x) b of (xi_a w_j)(xi_b rest)
        const CElement wj = w(j);
        for (const TensorSum delta = coproduct(g); const auto& [k, c] : delta.terms()) {
            CElement left = xi(k.first, wj);
            if (left.is_zero()) continue;
            CElement right = xi(k.second, CElement(rest, Scalar(1)));
            out += (left * right).scaled(c);
        }
    }
    std::lock_guard lock(cache_->mu);
    cache_->xi.emplace(std::make_pair(g, m), out);
    return out;
}

CElement ActionModel::xi(const Gen& g, const CElement& f) const {
    CElement out;
    for (const auto& [m, c] : f.terms()) out += xi_monomial(g, m).scaled(c);
    return out;
}

CElement ActionModel::xi(const Word& x, const CElement& f) const {
    CElement acc = f;
    const auto& letters = x.letters();
    for (auto it = letters.rbegin(); it != letters.rend() && !acc.is_zero(); ++it) acc = xi(*it, acc);
    return acc;
}

CElement ActionModel::xi(const UElement& x, const CElement& f) const {
    CElement out;
    for (const auto& [word, c] : x.terms()) out += xi(word, f).scaled(c);
    return out;
}

CElement ActionModel::phi(const Word& x) const {
    if (x.empty()) return CElement(Scalar(1));
    const Gen& head = x.letters().front();
    Word rest(std::vector<Gen>(x.letters().begin() + 1, x.letters().end()));
    CElement phi_rest = phi(rest);
    CElement out;
    for (const TensorSum delta = coproduct(head); const auto& [k, c] : delta.terms()) {
        CElement right = k.second.empty() ? CElement(Scalar(1)) : phi(k.second.letters().front());
        if (right.is_zero()) continue;
        out += (xi(k.first, phi_rest) * right).scaled(c);
    }
    return out;
}

CElement ActionModel::phi(const UElement& x) const {
    CElement out;
    for (const auto& [word, c] : x.terms()) out += phi(word).scaled(c);
    return out;
}

CElement ActionModel::act_defined(const Gen& g, const CElement& f) const {
    // x.f = (xi_{x(1)} f) phi(x(2))
    CElement out;
    for (const TensorSum delta = coproduct(g); const auto& [k, c] : delta.terms()) {
        CElement right = phi(k.second.letters().front());
        if (right.is_zero()) continue;
        out += (xi(k.first, f) * right).scaled(c);
    }
    return out;
}

CElement ActionModel::closed_monomial(const Gen& g, const Monomial& m) const {
    const int n1 = m[1], n2 = m[2], n3 = m[3], n4 = m[4];
    auto half = [](int x) { return rational(x, 2); };
    auto scale = [&](int t) {
        auto it = closed_scale_.find({g, t});
        return it == closed_scale_.end() ? Scalar(1) : it->second;
    };
    CElement out;
    auto emit = [&](int t, int a, int b, int c, int d, const Scalar& coeff) {
        if (a < 0 || b < 0 || c < 0 || d < 0) return;  // coefficient carries a vanishing [0]
        out.add_term(mono(a, b, c, d), coeff * scale(t));
    };

    switch (g.kind) {
        case Gen::Kind::Cartan: {
            const int k = g.k;
            Scalar ev = g.index == 1 ? qp(half(k * (-n1 + n3 + n4)), rational(-k, 4), 0)
                                     : qp(half(k * (2 * n1 + n2 - n4)), 0, rational(-k, 2));
            emit(0, n1, n2, n3, n4, ev);
            break;
        }
        case Gen::Kind::Lower:
            if (g.index == 1) {
                const mpq_class s = mpq_class(1, 4);
                if (n2 > 0)
                    emit(0, n1 + 1, n2 - 1, n3, n4,
                         -(qp(half(-n1 + n2 - n3 - n4), s) * qint(QExponent{n2}, Grain::QHalf)));
                if (n3 > 0)
                    emit(1, n1, n2 + 1, n3 - 1, n4, qp(half(-n1 + n3 - n4), s) * qint(QExponent{n3}, Grain::Q));
                if (n4 > 0)
                    emit(2, n1, n2, n3, n4 - 1, -(qp(half(-n1 + n3), s) * qint(QExponent{n4}, Grain::QHalf)));
            } else {
                if (n1 > 0)
                    emit(0, n1 - 1, n2, n3, n4,
                         -(qp(half(1 - n2 + n4), 0, mpq_class(1, 2)) * qint(QExponent{n1}, Grain::Q)));
            }
            break;
        case Gen::Kind::Raise:
            if (g.index == 1) {
                const mpq_class s = mpq_class(1, 4);
                if (n1 > 0)
                    emit(0, n1 - 1, n2 + 1, n3, n4,
                         -(qp(-1 + half(n1 - n3 - n4), s) * qint(QExponent{n1}, Grain::Q)));
                if (n2 > 0)
                    emit(1, n1, n2 - 1, n3 + 1, n4,
                         qp(-1 + half(-n1 + n2 - n3 - n4), s) * qint(QExponent{n2}, Grain::QHalf));
                emit(2, n1, n2, n3, n4 + 1,
                     qp(half(1 - n1 + n3), -s) * inv_one_plus_q() *
                         qint(QExponent{n4, -1, 0}, Grain::QHalf));
            } else {
                const mpq_class s2 = mpq_class(-3, 2);
                emit(0, n1 + 1, n2, n3, n4,
                     qp(-half(1 - n2 + n4), 0, mpq_class(-1, 2)) *
                         qint(QExponent{n1 + n2 - n4, 0, -1}, Grain::Q));
                if (n3 > 0)
                    emit(1, n1, n2 + 2, n3 - 1, n4,
                         -(qp(-1 + n1 + half(n2) + n3 - rational(3 * n4, 2), 0, s2) * inv_one_plus_q() *
                           qint(QExponent{n3}, Grain::Q)));
                if (n4 > 0)
                    emit(2, n1, n2 + 1, n3, n4 - 1,
                         qp(-1 + n1 + half(n2) + n3 - n4, 0, s2) * qint(QExponent{n4}, Grain::QHalf));
                if (n4 > 1)
                    emit(3, n1, n2, n3 + 1, n4 - 2,
                         -((Scalar::qq(4) - Scalar(1)) * qp(mpq_class(-5, 2) + n1 + half(n2 - n4), 0, s2) *
                           qint(QExponent{n4}, Grain::QHalf) * qint(QExponent{n4 - 1}, Grain::QHalf)));
            }
            break;
    }
    return out;
}

CElement ActionModel::act_closed(const Gen& g, const Monomial& m) const {
    {
        std::lock_guard lock(cache_->mu);
        auto it = cache_->closed.find({g, m});
        if (it != cache_->closed.end()) return it->second;
    }
    CElement out = closed_monomial(g, m);
    std::lock_guard lock(cache_->mu);
    cache_->closed.emplace(std::make_pair(g, m), out);
    return out;
}

CElement ActionModel::act_closed(const Gen& g, const CElement& f) const {
    CElement out;
    for (const auto& [m, c] : f.terms()) out += act_closed(g, m).scaled(c);
    return out;
}

CElement ActionModel::act_word(const Word& x, const CElement& f) const {
    CElement acc = f;
    const auto& letters = x.letters();
    for (auto it = letters.rbegin(); it != letters.rend() && !acc.is_zero(); ++it) acc = act_closed(*it, acc);
    return acc;
}

CElement ActionModel::act(const UElement& x, const CElement& f) const {
    CElement out;
    for (const auto& [word, c] : x.terms()) out += act_word(word, f).scaled(c);
    return out;
}

std::vector<MutationSite> ActionModel::mutation_sites() const {
    std::vector<MutationSite> sites;
    for (Gen g : {Gen::raise(1), Gen::raise(2), Gen::lower(1), Gen::lower(2)}) {
        for (int j = 1; j <= 4; ++j)
            for (const auto& [m, c] : xi_.at(g, j).terms())
                sites.push_back({MutationSite::Table::Xi, g, j, m});
    }
    for (int i = 1; i <= 2; ++i)
        for (const auto& [m, c] : phi_.raise[static_cast<std::size_t>(i - 1)].terms())
            sites.push_back({MutationSite::Table::Phi, Gen::raise(i), 0, m});
    const std::pair<Gen, int> closed_terms[] = {
        {Gen::qH(1), 1},    {Gen::qH(2), 1},    {Gen::lower(1), 3},
        {Gen::lower(2), 1}, {Gen::raise(1), 3}, {Gen::raise(2), 4},
    };
    for (const auto& [g, count] : closed_terms)
        for (int t = 0; t < count; ++t) sites.push_back({MutationSite::Table::Closed, g, t, {}});
    return sites;
}

ActionModel ActionModel::mutated(const MutationSite& site) const {
    ActionModel out(sigma_, xi_);
    out.phi_ = phi_;
    out.closed_scale_ = closed_scale_;
    const Scalar q = Scalar::qq(4);
    auto bump = [&](CElement& e) {
        CElement next;
        for (const auto& [m, c] : e.terms()) next.add_term(m, m == site.term ? c * q : c);
        e = next;
    };
    switch (site.table) {
        case MutationSite::Table::Xi: bump(out.xi_.at(site.gen, site.slot)); break;
        case MutationSite::Table::Phi: bump(out.phi_.raise[static_cast<std::size_t>(site.gen.index - 1)]); break;
        case MutationSite::Table::Closed: {
            auto [it, inserted] = out.closed_scale_.try_emplace({site.gen, site.slot}, q);
            if (!inserted) it->second *= q;
            break;
        }
    }
    return out;
}

}  // namespace qdress
