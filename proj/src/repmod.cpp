#include "qdress/repmod.hpp"

#include <algorithm>

namespace qdress {

namespace {

RVector specialize_element(const CElement& e) {
    RVector out;
    for (const auto& [m, c] : e.terms()) out.add_term(m, to_rational_function(c));
    return out;
}

class Closure {
public:
    Closure(int s1, int s2) : model_(Sigma::integers(s1, s2)) {}

    RVector apply(const Gen& g, const RVector& v) {
        RVector out;
        for (const auto& [m, c] : v.terms()) {
            auto key = std::make_pair(g, m);
            auto it = cache_.find(key);
            if (it == cache_.end()) it = cache_.emplace(key, specialize_element(model_.act_closed(g, m))).first;
            out += it->second.scaled(c);
        }
        return out;
    }

private:
    ActionModel model_;
    std::map<std::pair<Gen, Monomial>, RVector> cache_;
};

RVector reduce(const std::vector<RVector>& basis, const std::vector<Monomial>& pivots, RVector v) {
    for (std::size_t i = 0; i < basis.size() && !v.is_zero(); ++i) {
        RationalFunction c = v.coeff(pivots[i]);
        if (!c.is_zero()) v -= basis[i].scaled(c);
    }
    return v;
}

std::array<int, 2> weight_of(const Monomial& p, int s1, int s2) {
    auto wt = monomial_weight(p);
    return {4 * wt[0] - 2 * s1, 4 * wt[1] - 4 * s2};
}

}  // namespace

RVector reduce_against(const ModuleRealization& m, RVector v) { return reduce(m.basis, m.pivots, std::move(v)); }

ModuleRealization build_cyclic_module(int sigma1, int sigma2, std::size_t max_dim) {
    if (max_dim < 1) throw std::invalid_argument("max_dim must be positive");
    Closure closure(sigma1, sigma2);
    ModuleRealization mod;
    mod.sigma1 = sigma1;
    mod.sigma2 = sigma2;
    mod.basis.push_back(RVector(Monomial::unit(), RationalFunction(1)));
    mod.pivots.push_back(Monomial::unit());

    for (std::size_t idx = 0; idx < mod.basis.size(); ++idx) {
        for (const auto& [name, g] : named_generators()) {
            RVector r = reduce(mod.basis, mod.pivots, closure.apply(g, mod.basis[idx]));
            if (r.is_zero()) continue;
            if (mod.basis.size() >= max_dim)
                throw BoundExceeded("cyclic module not closed within dimension bound " + std::to_string(max_dim));
            const Monomial p = r.terms().begin()->first;
            r = r.scaled(r.terms().begin()->second.inverse());
            for (auto& b : mod.basis) {
                RationalFunction c = b.coeff(p);
                if (!c.is_zero()) b -= r.scaled(c);
            }
            mod.basis.push_back(std::move(r));
            mod.pivots.push_back(p);
        }
    }

    const std::size_t d = mod.basis.size();
    for (const auto& [name, g] : named_generators()) {
        RMatrix mat(d, std::vector<RationalFunction>(d));
        for (std::size_t i = 0; i < d; ++i) {
            RVector image = closure.apply(g, mod.basis[i]);
            RVector rest = image;
            for (std::size_t j = 0; j < d; ++j) {
                RationalFunction c = image.coeff(mod.pivots[j]);
                if (c.is_zero()) continue;
                mat[j][i] = c;
                rest -= mod.basis[j].scaled(c);
            }
            if (!rest.is_zero()) throw std::logic_error("module closure is not invariant under " + name);
        }
        mod.matrices.emplace(name, std::move(mat));
    }

    for (std::size_t i = 0; i < d; ++i) {
        auto wt = weight_of(mod.pivots[i], sigma1, sigma2);
        for (const auto& [m, c] : mod.basis[i].terms())
            if (weight_of(m, sigma1, sigma2) != wt) throw std::logic_error("basis vector is not a weight vector");
        mod.weights.push_back(wt);
    }
    return mod;
}

std::map<std::array<int, 2>, std::vector<std::size_t>> weight_decomposition(const ModuleRealization& m) {
    std::map<std::array<int, 2>, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < m.weights.size(); ++i) out[m.weights[i]].push_back(i);
    return out;
}

bool lowest_weight_is_minimal(const ModuleRealization& m) {
    // X1+ shifts the t-exponents by (4, -4) and X2+ by (-4, 8).
    const auto& w0 = m.weights.front();
    for (const auto& wt : m.weights) {
        int da = wt[0] - w0[0];
        int db = wt[1] - w0[1];
        if ((da + db) % 4 != 0) return false;
        int beta = (da + db) / 4;
        if ((da + 4 * beta) % 4 != 0) return false;
        int alpha = (da + 4 * beta) / 4;
        if (alpha < 0 || beta < 0) return false;
    }
    return true;
}

std::size_t rank(RMatrix a) {
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        RationalFunction inv = a[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            RationalFunction f = a[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k)
                if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

std::size_t lowest_weight_kernel_dimension(const ModuleRealization& m) {
    RMatrix stacked = m.matrices.at("F1");
    const RMatrix& f2 = m.matrices.at("F2");
    stacked.insert(stacked.end(), f2.begin(), f2.end());
    return m.dimension() - rank(std::move(stacked));
}

long weyl_dimension(int s1, int s2) {
    return static_cast<long>(s1 + 1) * (s2 + 1) * (s1 + s2 + 2) * (s1 + 2 * s2 + 3) / 6;
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    std::size_t n = a.size();
    std::size_t k = b.size();
    std::size_t p = k ? b[0].size() : 0;
    RMatrix out(n, std::vector<RationalFunction>(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < p; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

bool is_zero_matrix(const RMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

RMatrix letter_matrix(const ModuleRealization& m, const Gen& g) {
    if (!g.is_cartan()) return m.matrices.at(generator_name(g));
    const RMatrix& qh = m.matrices.at(g.index == 1 ? "qH1" : "qH2");
    const std::size_t d = qh.size();
    RMatrix out(d, std::vector<RationalFunction>(d));
    for (std::size_t i = 0; i < d; ++i) {
        const RationalFunction& ev = qh[i][i];
        // diagonal entries are powers t^e with e even
        if (!(ev.num() == UPoly(mpq_class(1)) && ev.den() == UPoly(mpq_class(1))) || ev.shift() % 2 != 0)
            throw std::logic_error("Cartan eigenvalue is not an even power of t");
        out[i][i] = RationalFunction::t_power(ev.shift() / 2 * g.k);
    }
    return out;
}

RMatrix element_matrix(const ModuleRealization& m, const UElement& x) {
    const std::size_t d = m.dimension();
    RMatrix acc(d, std::vector<RationalFunction>(d));
    for (const auto& [word, c] : x.terms()) {
        RMatrix prod(d, std::vector<RationalFunction>(d));
        for (std::size_t i = 0; i < d; ++i) prod[i][i] = RationalFunction(1);
        for (const Gen& g : word.letters()) prod = matmul(prod, letter_matrix(m, g));
        RationalFunction rc = specialize(c, m.sigma1, m.sigma2);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!prod[i][j].is_zero()) acc[i][j] += rc * prod[i][j];
    }
    return acc;
}

std::vector<Monomial> monomials_up_to(int d) {
    std::vector<Monomial> out;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int c = 0; a + b + c <= d; ++c)
                for (int e = 0; a + b + c + e <= d; ++e) out.push_back(Monomial{{a, b, c, e}});
    return out;
}

bool VerificationReport::passed() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.passed(); });
}

VerificationReport verify_relations(const ActionModel& model, int degree_bound, bool stop_early) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    VerificationReport report;
    report.degree_bound = degree_bound;
    report.mode = model.sigma();
    const auto monos = monomials_up_to(degree_bound);
    for (const Relation& rel : defining_relations()) {
        RelationCheck check;
        check.id = rel.id;
        for (const Monomial& m : monos) {
            ++check.tested;
            CElement residual = model.act(rel.element, CElement(m, Scalar(1)));
            if (residual.is_zero()) continue;
            if (check.failures++ == 0) {
                check.first_failure = m;
                check.first_residual = residual;
            }
            if (stop_early) break;
        }
        report.relations.push_back(std::move(check));
        if (stop_early && !report.relations.back().passed()) break;
    }
    return report;
}

VerificationReport verify_relations(int degree_bound, Sigma mode) {
    return verify_relations(ActionModel(mode), degree_bound);
}

std::vector<OracleMismatch> check_oracle(const ActionModel& model, int degree_bound, bool stop_early) {
    std::vector<OracleMismatch> out;
    std::vector<Gen> gens;
    for (const auto& [name, g] : named_generators()) gens.push_back(g);
    gens.push_back(Gen::cartan(1, 1));
    gens.push_back(Gen::cartan(2, -1));
    for (const Monomial& m : monomials_up_to(degree_bound)) {
        CElement f(m, Scalar(1));
        for (const Gen& g : gens) {
            if (model.act_closed(g, f) != model.act_defined(g, f)) {
                out.push_back({g, m});
                if (stop_early) return out;
            }
        }
    }
    return out;
}

}  // namespace qdress
