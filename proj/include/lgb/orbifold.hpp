#ifndef LGB_ORBIFOLD_HPP
#define LGB_ORBIFOLD_HPP

#include "lgb/milnor.hpp"
#include "lgb/symmetry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace lgb {

// Convention switches for the star product. The defaults implement the
// definitions; the alternatives exist so the test suite can demonstrate that
// the axiom checks actually bite (mutation sensitivity).
struct OrbifoldConventions {
    enum class GammaMu { Standard, Inverted, Dropped };
    enum class Restriction { RestrictThenReduce, DropUnfixedExponents };

    GammaMu gamma_mu = GammaMu::Standard;
    Restriction restriction = Restriction::RestrictThenReduce;
    DetConvention det = DetConvention::Full;
};

// One summand (Q_{W|fix(g)})^G of the state space.
struct Sector {
    GroupElement g;
    FixedLocus locus;
    Polynomial restricted;              // over the locus variables
    RingPtr ring;                       // Milnor ring with inherited weights
    std::vector<Monomial> invariant;    // ambient monomials, G-invariant
    std::vector<size_t> ring_index;     // position of invariant[k] in ring->basis()
};

// Full audit trail of one star product evaluation.
struct ProductEvaluation {
    size_t a = 0, b = 0;                // flat basis indices
    bool fix_condition = false;         // fix(g) u fix(h) u fix(g+h) = C^n
    size_t mu_g_cap_h = 1;              // dim Q_{W|fix(g) cap fix(h)}
    size_t mu_g_plus_h = 1;             // dim Q_{W|fix(g+h)}
    Scalar hess_num_coeff, hess_den_coeff;
    Monomial hess_num_mon, hess_den_mon;  // ambient monomials
    bool gamma_divisible = true;
    Scalar gamma_coeff;
    Monomial gamma_mon;                 // ambient monomial quotient
    std::vector<Scalar> result;         // flat coordinates (empty = zero)
    // components landing outside the invariant sector basis: (sector, ring
    // basis index, coefficient); nonempty only under broken conventions
    std::vector<std::tuple<size_t, size_t, Scalar>> leaks;
};

// Orbifolded B-model B[W,G] = sum over g in G of (Q_{W|fix(g)})^G with the
// Krawitz star product and sector pairing. Requires W admissible and
// G <= SL(W).
class BModel {
public:
    BModel(const Polynomial& w, const SymmetryGroup& g, OrbifoldConventions conv = {});

    const Polynomial& polynomial() const { return w_; }
    const SymmetryGroup& group() const { return g_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const OrbifoldConventions& conventions() const { return conv_; }
    bool invertible_w() const { return invertible_; }

    const std::vector<Sector>& sectors() const { return sectors_; }
    size_t dim() const { return keys_.size(); }

    // flat basis access
    size_t sector_of(size_t i) const { return keys_[i].first; }
    const Monomial& monomial_of(size_t i) const;  // ambient monomial
    const GroupElement& twist_of(size_t i) const { return sectors_[keys_[i].first].g; }
    std::string label(size_t i) const;            // "[m; (g1, ..., gn)]"
    const Rational& degree(size_t i) const { return degrees_[i]; }
    size_t unit_index() const { return unit_; }

    std::optional<size_t> find_basis(size_t sector, const Monomial& ambient) const;

    // star product of basis elements, with full evaluation data
    const ProductEvaluation& star(size_t i, size_t j) const { return star_[i][j]; }

    std::vector<Scalar> star_coords(const std::vector<Scalar>& a,
                                    const std::vector<Scalar>& b) const;

    Scalar pairing(size_t i, size_t j) const;
    MatS pairing_matrix() const;

    // action phase of a group element on a basis element (used by the
    // equivariance checks)
    Rational basis_phase(size_t i, const GroupElement& e) const;

    std::optional<Rational> coords_degree(const std::vector<Scalar>& a) const;

private:
    const RingPtr& locus_ring(const FixedLocus& locus);
    ProductEvaluation evaluate_star(size_t i, size_t j);

    Polynomial w_;
    SymmetryGroup g_;
    OrbifoldConventions conv_;
    std::vector<Rational> weights_;
    bool invertible_ = false;

    std::vector<Sector> sectors_;
    std::map<std::vector<bool>, RingPtr> ring_cache_;
    std::vector<std::pair<size_t, size_t>> keys_;  // (sector, position)
    std::vector<Rational> degrees_;
    size_t unit_ = 0;
    std::vector<std::vector<ProductEvaluation>> star_;
};

using ModelPtr = std::shared_ptr<const BModel>;

struct BModelAxiomReport {
    bool invertible = false;  // failures on invertible W are bugs, on
                              // noninvertible W they are findings
    bool pass = true;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

// Exhaustive: identity, commutativity, associativity over all basis triples,
// degree additivity, sector-anti-diagonal pairing, nondegeneracy, Frobenius
// property, and absence of invariance leaks.
BModelAxiomReport verify_bmodel_axioms(const BModel& model);

}  // namespace lgb

#endif
