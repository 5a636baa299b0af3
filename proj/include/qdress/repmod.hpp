#ifndef QDRESS_REPMOD_HPP
#define QDRESS_REPMOD_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdress/action.hpp"
#include "qdress/calgebra.hpp"
#include "qdress/rational_function.hpp"

namespace qdress {

using RVector = LinComb<RationalFunction>;
/// Dense row-major matrix over Q(t).
using RMatrix = std::vector<std::vector<RationalFunction>>;

/// The cyclic module U.1 for integer sigma, realized on a basis of
/// weight vectors of the coordinate algebra.
struct ModuleRealization {
    int sigma1 = 0;
    int sigma2 = 0;
    /// Reduced echelon basis; basis[0] is the unit 1.
    std::vector<RVector> basis;
    /// pivots[i] is the leading (lexicographically smallest) monomial of basis[i].
    std::vector<Monomial> pivots;
    /// "qH1", "qH2", "E1", "E2", "F1", "F2" -> matrix; column i is the image of basis[i].
    std::map<std::string, RMatrix> matrices;
    /// t-exponents (a, b) of the q^{H1} and q^{H2} eigenvalues of each basis vector.
    std::vector<std::array<int, 2>> weights;

    std::size_t dimension() const { return basis.size(); }
};

/// The closure did not terminate within the dimension bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Breadth-first closure of {1} under the six generators with exact row
/// reduction over Q(t). Throws BoundExceeded once the span exceeds max_dim.
ModuleRealization build_cyclic_module(int sigma1, int sigma2, std::size_t max_dim);

/// Residual of v after eliminating the basis pivots; zero iff v is in the span.
RVector reduce_against(const ModuleRealization& m, RVector v);

/// Weight (a, b) -> indices of the basis vectors carrying it.
std::map<std::array<int, 2>, std::vector<std::size_t>> weight_decomposition(const ModuleRealization& m);

/// Whether every weight equals weights[0] plus a nonnegative integer
/// combination of the raising shifts.
bool lowest_weight_is_minimal(const ModuleRealization& m);

/// dim of ker F1 cap ker F2; 1 is necessary for irreducibility.
std::size_t lowest_weight_kernel_dimension(const ModuleRealization& m);

/// Weyl dimension of the irreducible B2 module with labels (s1, s2).
long weyl_dimension(int sigma1, int sigma2);

/// Matrix of a letter. Cartan letters q^{k H_i/2} are built from the
/// diagonal q^{H_i} matrix.
RMatrix letter_matrix(const ModuleRealization& m, const Gen& g);
/// Image of a free-algebra element under the representation.
RMatrix element_matrix(const ModuleRealization& m, const UElement& x);
bool is_zero_matrix(const RMatrix& a);
RMatrix matmul(const RMatrix& a, const RMatrix& b);
/// Rank by Gaussian elimination over Q(t).
std::size_t rank(RMatrix a);

struct RelationCheck {
    std::string id;
    std::size_t tested = 0;
    std::size_t failures = 0;
    Monomial first_failure{};
    CElement first_residual;

    bool passed() const { return failures == 0; }
};

struct VerificationReport {
    int degree_bound = 0;
    Sigma mode;
    std::vector<RelationCheck> relations;

    bool passed() const;
};

/// Every monomial of total degree <= d, in lexicographic order.
std::vector<Monomial> monomials_up_to(int d);

/// Applies every defining relation, as an operator built from act_closed, to
/// each monomial of degree <= degree_bound. Stops a relation at its first
/// nonzero residual when stop_early is set.
VerificationReport verify_relations(const ActionModel& model, int degree_bound, bool stop_early = false);
VerificationReport verify_relations(int degree_bound, Sigma mode);

struct OracleMismatch {
    Gen gen;
    Monomial monomial;
};

/// Compares act_closed with act_defined for the six generators and the two
/// Cartan half-powers on every monomial of degree <= degree_bound.
std::vector<OracleMismatch> check_oracle(const ActionModel& model, int degree_bound, bool stop_early = false);

}  // namespace qdress

#endif
