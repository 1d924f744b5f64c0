#ifndef LGB_STRUCTURE_HPP
#define LGB_STRUCTURE_HPP

#include "lgb/groebner.hpp"
#include "lgb/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Rows = monomials in the polynomial's canonical term order, columns =
// ambient variables.
struct ExponentMatrix {
    std::vector<Monomial> rows;
    size_t nvars = 0;

    size_t nrows() const { return rows.size(); }
    int entry(size_t i, size_t j) const { return rows[i][j]; }
};

ExponentMatrix exponent_matrix(const Polynomial& w);

struct WeightVector {
    std::vector<Rational> q;
    bool unique = true;

    // J = (q_1, ..., q_n) as a phase vector
    const std::vector<Rational>& phases() const { return q; }
};

// Exact solution of A q = (1,...,1). Throws NotQuasihomogeneous when the
// system is inconsistent, NonUniqueWeights when rank(A) < n, and
// WeightOutOfRange when some q_i is outside (0,1).
WeightVector compute_weights(const Polynomial& w);

// Partial derivatives (dW/dx_1, ..., dW/dx_n).
std::vector<Polynomial> jacobian(const Polynomial& w);

// The toolkit's default quotient order: weighted degree + revlex using the
// quasihomogeneous weights when they exist, total degree otherwise.
MonomialOrder quotient_order(const Polynomial& w);

// Groebner basis of the Jacobian ideal in the default order.
GroebnerBasis jacobian_groebner(const Polynomial& w);

// Finite-dimensionality of the Jacobian quotient. Precondition (checked):
// zero constant and linear part.
bool is_nondegenerate(const Polynomial& w);

struct AdmissibilityResult {
    bool admissible = false;
    std::string reason;  // failing clause when not admissible

    explicit operator bool() const { return admissible; }
};

// Nondegenerate + quasihomogeneous with unique in-range weights + no
// cross-term monomial x_i x_j. Never throws; the reason carries the clause.
AdmissibilityResult is_admissible(const Polynomial& w);

enum class BlockKind { Fermat, Loop, Chain, NoninvertibleBlock };

const char* block_kind_name(BlockKind k);

struct Block {
    std::vector<size_t> variables;  // ambient indices, increasing
    Polynomial summand;             // over the ambient variable list
    BlockKind kind = BlockKind::NoninvertibleBlock;
    // for fermat/loop/chain: the variable order realizing the shape
    std::vector<size_t> shape_order;
};

struct AtomicDecomposition {
    bool invertible = false;
    std::vector<Block> blocks;
};

// Connected components of the variable-sharing graph; invertible polynomials
// get their atomic labels by permutation shape matching. Requires admissible
// input.
AtomicDecomposition classify(const Polynomial& w);

// Multiset equality of quasihomogeneous weights.
bool check_same_weights(const Polynomial& a, const Polynomial& b);

struct WebbResult {
    bool applicable = false;
    std::optional<Monomial> witness;  // standard monomial of weighted degree 1
};

// No standard monomial of weighted degree exactly 1 (the hypothesis under
// which same ordered weights force equivalence).
WebbResult webb_applicable(const Polynomial& w);

}  // namespace lgb

#endif
