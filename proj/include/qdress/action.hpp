#ifndef QDRESS_ACTION_HPP
#define QDRESS_ACTION_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qdress/calgebra.hpp"
#include "qdress/freeu.hpp"
#include "qdress/scalar.hpp"

namespace qdress {

/// Images of w1..w4 under the dressing action of X_1^+, X_2^+, X_1^-, X_2^-.
/// The Cartan letters act diagonally with the weights of monomial_weight().
struct XiTable {
    // [raise/lower][i - 1][j - 1]
    std::array<std::array<std::array<CElement, 4>, 2>, 2> images;

    const CElement& at(const Gen& g, int j) const;
    CElement& at(const Gen& g, int j);
};

/// phi on the letters. phi(X_i^-) = 0 and phi on Cartan letters is the
/// scalar q^{-k s1/4} (i = 1) or q^{-k s2/2} (i = 2).
struct PhiTable {
    std::array<CElement, 2> raise;
};

/// Identifies one coefficient of the action tables, for mutation testing.
struct MutationSite {
    enum class Table { Xi, Phi, Closed };
    Table table = Table::Xi;
    Gen gen;
    int slot = 0;       // w index (Xi), unused (Phi), formula term (Closed)
    Monomial term{};    // which term of a multi-term image (Xi, Phi)

    std::string label() const;
};

/// The U_q(so(5)) action on the coordinate algebra for fixed sigma.
///
/// act_closed evaluates the closed-form action on ordered monomials and is
/// the production path. act_defined computes x.f = (xi_{x(1)} f) phi(x(2))
/// from the coproduct, the dressing table and phi; it is kept as an
/// independent oracle for act_closed.
class ActionModel {
public:
    explicit ActionModel(Sigma sigma = Sigma::generic());
    ActionModel(Sigma sigma, XiTable xi);

    const Sigma& sigma() const { return sigma_; }
    const XiTable& xi_table() const { return xi_; }
    const PhiTable& phi_table() const { return phi_; }

    /// Dressing action, extended to products by the Leibniz rule.
    CElement xi(const Gen& g, const CElement& f) const;
    CElement xi(const Word& x, const CElement& f) const;
    CElement xi(const UElement& x, const CElement& f) const;

    /// phi on a single letter.
    CElement phi(const Gen& g) const;
    /// Recursive extension phi(g y) = (xi_{g(1)} phi(y)) phi(g(2)).
    CElement phi(const Word& x) const;
    CElement phi(const UElement& x) const;

    CElement act_closed(const Gen& g, const CElement& f) const;
    CElement act_closed(const Gen& g, const Monomial& m) const;
    CElement act_defined(const Gen& g, const CElement& f) const;
    /// Left action of a word: rightmost letter acts first.
    CElement act_word(const Word& x, const CElement& f) const;
    CElement act(const UElement& x, const CElement& f) const;

    /// Every nonzero table coefficient that can be perturbed.
    std::vector<MutationSite> mutation_sites() const;
    /// Copy of this model with the chosen coefficient multiplied by q.
    ActionModel mutated(const MutationSite& site) const;

private:
    CElement xi_monomial(const Gen& g, const Monomial& m) const;
    CElement closed_monomial(const Gen& g, const Monomial& m) const;
    Scalar qp(const mpq_class& c0, const mpq_class& s1 = 0, const mpq_class& s2 = 0) const;
    Scalar qint(const QExponent& m, Grain grain) const;

    struct Cache {
        std::mutex mu;
        std::map<std::pair<Gen, Monomial>, CElement> xi;
        std::map<std::pair<Gen, Monomial>, CElement> closed;
    };

    Sigma sigma_;
    XiTable xi_;
    PhiTable phi_;
    // closed-form term multipliers, indexed by [generator slot][term]
    std::map<std::pair<Gen, int>, Scalar> closed_scale_;
    std::shared_ptr<Cache> cache_;
};

/// Dressing table used by the action (X_1^+ has four images; X_1^- maps
/// w2 -> w1 and w3 -> w2).
XiTable standard_xi_table();
/// Variant with the X_1^- row {0, -q^{1/2} w2, q^{1/2} w3, -1}, which is
/// weight-inconsistent.
XiTable uncorrected_xi_table();

}  // namespace qdress

#endif
