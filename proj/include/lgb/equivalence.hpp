#ifndef LGB_EQUIVALENCE_HPP
#define LGB_EQUIVALENCE_HPP

#include "lgb/polynomial.hpp"
#include "lgb/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Weighted polynomial substitution h: each target variable maps to a
// weighted-homogeneous polynomial of that variable's weight in the source
// variables.
struct Substitution {
    std::vector<std::string> source_vars;
    std::vector<std::string> target_vars;
    std::vector<Polynomial> images;  // per target variable, over source_vars

    std::string str() const;
};

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Substitution> witness;
    FieldPtr field;                  // extension the witness lives over, if any
    bool refuted_by_unit_ideal = false;  // GB = {1} on the coefficient system
    std::string detail;
};

// Searches weighted substitutions h with W1 = W2 o h, imposing invertibility
// by saturating against det of the linear part. A returned witness is
// re-verified by exact expansion; a refutation carries the GB = {1}
// certificate. Throws WeightMismatch when the unordered weights differ and
// SearchInconclusive when the system is solvable but no closed-form witness
// could be extracted.
EquivalenceResult search_linear_equivalence(const Polynomial& w1, const Polynomial& w2);

}  // namespace lgb

#endif
