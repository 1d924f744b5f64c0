#ifndef LGB_MILNOR_HPP
#define LGB_MILNOR_HPP

#include "lgb/groebner.hpp"
#include "lgb/linalg.hpp"
#include "lgb/polynomial.hpp"
#include "lgb/structure.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Element of a Milnor ring in basis coordinates.
struct GradedElement {
    std::vector<Scalar> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

// The Milnor ring Q_W = C[x]/(Jacobian ideal) as a graded Frobenius algebra:
// standard-monomial basis, grading by 2*(weighted degree), Hessian normal
// form, residue pairing and multiplication table. Immutable once built.
class MilnorRing {
public:
    // Full construction: weights computed from W (must be unique and in
    // range), quotient must be finite dimensional. The zero polynomial in
    // zero variables yields the one-dimensional ring.
    explicit MilnorRing(const Polynomial& w);

    // Restricted-ring construction with inherited weights (sector rings of
    // orbifolded models); skips the weight solve but validates everything
    // else.
    MilnorRing(const Polynomial& w, std::vector<Rational> weights);

    const Polynomial& polynomial() const { return w_; }
    const std::vector<std::string>& vars() const { return w_.vars(); }
    const std::vector<Rational>& weights() const { return weights_; }
    const GroebnerBasis& groebner() const { return gb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    size_t mu() const { return basis_.size(); }
    const Rational& c_hat() const { return c_hat_; }

    // Hess(W) reduced in the ring: coefficient times the top basis monomial.
    const Scalar& hessian_coeff() const { return hess_coeff_; }
    const Monomial& hessian_monomial() const { return hess_mon_; }

    // weighted degree p of a monomial; the stored grading is 2p
    Rational weighted_degree(const Monomial& m) const { return m.weighted_degree(weights_); }
    Rational degree(const Monomial& m) const { return 2 * m.weighted_degree(weights_); }

    size_t basis_index(const Monomial& m) const;
    std::optional<size_t> find_basis_index(const Monomial& m) const;

    GradedElement zero_element() const { return {std::vector<Scalar>(mu(), Scalar())}; }
    GradedElement basis_element(size_t i) const;
    GradedElement unit() const { return basis_element(basis_index(Monomial(w_.nvars()))); }

    // NF(p) expanded in basis coordinates.
    GradedElement reduce(const Polynomial& p) const;

    // structure constants: m_i * m_j as sparse coordinates over the basis
    const std::vector<std::pair<size_t, Scalar>>& product_row(size_t i, size_t j) const;

    GradedElement product(const GradedElement& a, const GradedElement& b) const;
    Scalar pairing(size_t i, size_t j) const { return pairing_(static_cast<int>(i), static_cast<int>(j)); }
    Scalar pairing(const GradedElement& a, const GradedElement& b) const;
    const MatS& pairing_matrix() const { return pairing_; }

    // degree of a homogeneous element (2p convention); nullopt for 0 or
    // inhomogeneous
    std::optional<Rational> element_degree(const GradedElement& a) const;

    std::string basis_string(size_t i) const { return basis_[i].str(w_.vars()); }

private:
    void build(std::optional<std::vector<Rational>> supplied_weights);

    Polynomial w_;
    std::vector<Rational> weights_;
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    Rational c_hat_;
    Scalar hess_coeff_;
    Monomial hess_mon_;
    std::vector<std::vector<std::vector<std::pair<size_t, Scalar>>>> mult_;
    MatS pairing_;
};

using RingPtr = std::shared_ptr<const MilnorRing>;

struct FrobeniusCheckReport {
    bool pass = true;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

// Exhaustive Frobenius-algebra axioms on the ring: pairing symmetry and
// nondegeneracy, Frobenius property on all basis triples, degree additivity
// of products, unit behavior.
FrobeniusCheckReport verify_frobenius(const MilnorRing& ring);

}  // namespace lgb

#endif
