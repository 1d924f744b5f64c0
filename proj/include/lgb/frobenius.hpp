#ifndef LGB_FROBENIUS_HPP
#define LGB_FROBENIUS_HPP

#include "lgb/milnor.hpp"
#include "lgb/orbifold.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Uniform basis-indexed view of a graded Frobenius algebra (Milnor ring or
// orbifolded B-model), so one verifier serves both.
struct AlgebraView {
    std::string name;
    size_t dim = 0;
    size_t nvars = 0;  // ambient variables, for the group action
    std::vector<std::string> labels;
    std::vector<Rational> degrees;
    std::vector<Scalar> unit;
    std::function<std::vector<Scalar>(size_t, size_t)> product;  // basis x basis -> coords
    std::function<Scalar(size_t, size_t)> pairing;
    std::function<Rational(size_t, const GroupElement&)> phase;  // action phase on basis elt
    // Hess(W) expressed in the basis, when it is a basis multiple
    std::optional<std::pair<size_t, Scalar>> hess;

    std::vector<Scalar> product_coords(const std::vector<Scalar>& a,
                                       const std::vector<Scalar>& b) const;
    Scalar pairing_coords(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

AlgebraView view_of(const RingPtr& ring, const std::string& name = "Q_W");
AlgebraView view_of(const ModelPtr& model, const std::string& name = "B[W,G]");

// Basis-indexed linear map with verification metadata; phi and its extension
// psi are both instances.
struct FrobeniusMap {
    AlgebraView source, target;
    std::vector<std::vector<Scalar>> images;  // images[i] = coords of f(e_i)

    // rings/models retained when the map was built between concrete objects
    RingPtr source_ring, target_ring;
    ModelPtr source_model, target_model;

    std::vector<Scalar> apply(const std::vector<Scalar>& coords) const;

    // image of basis i is a single nonzero multiple of some target basis elt
    bool diagonal_entry(size_t i, size_t* target_index, Scalar* constant) const;
    bool is_diagonal() const;
};

FrobeniusMap identity_map(const RingPtr& ring);

struct IsoCertificate {
    bool dims_equal = false;
    bool bijective = false;
    bool unit_ok = false;
    bool graded = false;
    bool products_ok = false;
    bool pairings_ok = false;
    enum class Transport { Pass, Fail, NotApplicable };
    Transport hessian_transport = Transport::NotApplicable;
    bool equivariant = true;  // filled by is_equivariant when a group is given
    std::vector<std::string> witnesses;

    bool pass() const {
        return dims_equal && bijective && unit_ok && graded && products_ok && pairings_ok &&
               hessian_transport != Transport::Fail && equivariant;
    }
};

// Exhaustive certificate: bijectivity (exact rank), unit, grading, products
// and pairings over all basis pairs, Hessian-line transport with exact
// coefficient comparison.
IsoCertificate verify_frobenius_iso(const FrobeniusMap& f);

// f(g . m) = g . f(m) for all basis elements and generators, as an exact
// phase comparison; the witness describes the first violation.
bool is_equivariant(const FrobeniusMap& f, const SymmetryGroup& g, std::string* witness = nullptr);

}  // namespace lgb

#endif
