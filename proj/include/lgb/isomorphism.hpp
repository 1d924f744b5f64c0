#ifndef LGB_ISOMORPHISM_HPP
#define LGB_ISOMORPHISM_HPP

#include "lgb/frobenius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Diagonal map phi(m_i) = constants[i] * m_i between rings sharing a basis
// monomial set.
FrobeniusMap diagonal_map(const RingPtr& source, const RingPtr& target,
                          const std::vector<Scalar>& constants);

// phi(m) = (prod_i c_i^{a_i}) m for per-variable constants.
FrobeniusMap scaling_map(const RingPtr& source, const RingPtr& target,
                         const std::vector<Scalar>& var_constants);

// One binomial relation prod_i c_i^{u_i} = q collected from the product or
// pairing tables.
struct ScalingConstraint {
    std::vector<long> u;
    Rational q;
    std::string origin;
};

struct VariableSolution {
    size_t var = 0;
    long exponent = 1;   // minimal exponent g with c^g pinned
    Rational value = 1;  // c^g = value
    Scalar c;            // the chosen exact root
};

struct ScalingSolveResult {
    bool found = false;
    std::optional<FrobeniusMap> map;
    IsoCertificate certificate;  // of the returned map
    std::vector<VariableSolution> solved;
    std::vector<ScalingConstraint> pairing_constraints;
    std::vector<ScalingConstraint> product_constraints;
    FieldPtr field;  // extension adjoined, when any
    std::string modulus_note;
    std::string infeasibility;  // set when found == false
};

// Solves the diagonal ansatz phi(m) = (prod c_i^{a_i}) m between rings with
// equal basis sets and weights. Constraints are derived independently from
// the pairing ratios and the product tables; the final witness must satisfy
// both. Adjoins at most one extension modulus. Throws NotBinomialSolvable
// for systems outside the per-variable binomial fragment; returns found =
// false with the infeasible constraint set when no diagonal map exists.
ScalingSolveResult solve_scaling_iso(const RingPtr& source, const RingPtr& target,
                                     const std::string& symbol = "c");

struct ExtensionResult {
    ModelPtr source_model, target_model;
    FrobeniusMap psi;
    IsoCertificate certificate;
    WellBehavedCertificate wb_source, wb_target;
};

// The isomorphism-extension construction psi([p; h]) = [phi(p); h]. Checks
// the well-behaved hypothesis on both pairs and the equivariant-isomorphism
// hypothesis on phi, then re-verifies the conclusion exhaustively; a failing
// certificate is returned, never swallowed.
ExtensionResult extend_isomorphism(const FrobeniusMap& phi, const SymmetryGroup& g,
                                   OrbifoldConventions conv = {});

struct CombineResult {
    RingPtr source_ring, target_ring;
    FrobeniusMap map;
    IsoCertificate certificate;
};

// Tensor construction phi(alpha beta) = phi1(alpha) phi2(beta) on the sum
// polynomials in disjoint variables. When groups are supplied, equivariance
// of the factors and of the combined map (w.r.t. G1 x G2) is verified.
CombineResult combine_isomorphisms(const FrobeniusMap& f1, const FrobeniusMap& f2,
                                   const SymmetryGroup* g1 = nullptr,
                                   const SymmetryGroup* g2 = nullptr);

// Phase-vector concatenation G1 x G2 acting on the disjoint union of
// variables of w (first block) and the remaining ones.
SymmetryGroup product_group(const Polynomial& sum_poly, const SymmetryGroup& g1,
                            const SymmetryGroup& g2);

}  // namespace lgb

#endif
