#ifndef LGB_GROEBNER_HPP
#define LGB_GROEBNER_HPP

#include "lgb/polynomial.hpp"

#include <vector>

namespace lgb {

// Reduced Groebner basis: generators monic, pairwise irreducible, sorted by
// leading monomial (ascending in the basis order), hence canonical for the
// ideal and order.
struct GroebnerBasis {
    std::vector<std::string> vars;
    MonomialOrder order;
    std::vector<Polynomial> gens;
    bool reduced = true;

    bool is_unit_ideal() const {
        return gens.size() == 1 && gens[0].term_count() == 1 &&
               gens[0].terms().begin()->first.is_unit();
    }
    bool is_zero_ideal() const { return gens.empty(); }
};

// Buchberger with normal pair selection and the coprimality + chain
// criteria; output is inter-reduced to the unique reduced basis.
GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order);

// Unique remainder of p modulo gb: no term of the result is divisible by any
// basis leading term.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct StandardMonomials {
    bool finite = false;
    // increasing weighted degree, ties by the basis order
    std::vector<Monomial> monomials;
};

// Complement of the leading-term staircase; finite flag is false when the
// quotient is infinite dimensional (then monomials is left empty).
StandardMonomials standard_monomials(const GroebnerBasis& gb);

// Weak Nullstellensatz oracle: reduced basis equals {1}, i.e. the generators
// have no common complex zero.
bool ideal_is_unit(const std::vector<Polynomial>& generators);

}  // namespace lgb

#endif
