#ifndef LGB_SYMMETRY_HPP
#define LGB_SYMMETRY_HPP

#include "lgb/polynomial.hpp"
#include "lgb/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgb {

// Diagonal symmetry written additively: phases in [0,1)^n, group law
// coordinatewise addition mod Z.
struct GroupElement {
    std::vector<Rational> phases;

    static GroupElement identity(size_t n) {
        return GroupElement{std::vector<Rational>(n, Rational(0))};
    }
    static GroupElement reduced(std::vector<Rational> raw) {
        for (auto& p : raw) p = mod_one(p);
        return GroupElement{std::move(raw)};
    }

    size_t size() const { return phases.size(); }

    bool is_identity() const {
        for (const auto& p : phases)
            if (p != 0) return false;
        return true;
    }

    GroupElement operator+(const GroupElement& o) const {
        std::vector<Rational> r(phases.size());
        for (size_t i = 0; i < phases.size(); ++i) r[i] = mod_one(phases[i] + o.phases[i]);
        return GroupElement{std::move(r)};
    }

    GroupElement operator-() const {
        std::vector<Rational> r(phases.size());
        for (size_t i = 0; i < phases.size(); ++i) r[i] = mod_one(-phases[i]);
        return GroupElement{std::move(r)};
    }

    // phase of det(g) = sum of phases mod Z
    Rational det_phase() const {
        Rational s(0);
        for (const auto& p : phases) s += p;
        return mod_one(s);
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.phases == b.phases;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.phases < b.phases;
    }

    std::string str() const;
};

struct FixedLocus {
    std::vector<bool> mask;  // mask[i] = variable i is fixed (phase 0)

    size_t dim() const {
        size_t d = 0;
        for (bool b : mask)
            if (b) ++d;
        return d;
    }
    std::vector<size_t> indices() const {
        std::vector<size_t> ix;
        for (size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) ix.push_back(i);
        return ix;
    }
    static FixedLocus intersect(const FixedLocus& a, const FixedLocus& b) {
        FixedLocus r = a;
        for (size_t i = 0; i < r.mask.size(); ++i) r.mask[i] = r.mask[i] && b.mask[i];
        return r;
    }
    friend bool operator==(const FixedLocus& a, const FixedLocus& b) { return a.mask == b.mask; }
};

FixedLocus fixed_locus(const GroupElement& g);

// Convention fork for the determinant factor in g*(m) = det(g) (m o g): the
// default follows the definition literally (full determinant); Restricted
// sums only phases over a sector's fixed locus and exists for sensitivity
// testing.
enum class DetConvention { Full, Restricted };

// Exact phase theta with g*(m) = e^{2 pi i theta} m. The sector mask is only
// consulted by the Restricted convention.
Rational act_phase(const GroupElement& g, const Monomial& m,
                   DetConvention conv = DetConvention::Full,
                   const std::vector<bool>* sector_mask = nullptr);

class SymmetryGroup {
public:
    SymmetryGroup(Polynomial w, std::vector<GroupElement> generators,
                  std::vector<GroupElement> elements);

    const Polynomial& polynomial() const { return w_; }
    size_t nvars() const { return w_.nvars(); }
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::vector<GroupElement>& elements() const { return elements_; }  // sorted
    size_t order() const { return elements_.size(); }

    bool contains(const GroupElement& g) const;
    bool in_sl() const;  // every element has det phase 0

private:
    Polynomial w_;
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> elements_;
};

// {g in (Q/Z)^n : A g in Z^m} via integer Smith normal form of the exponent
// matrix. Throws InfiniteGroup when rank(A) < n.
SymmetryGroup max_symmetry_group(const Polynomial& w);

SymmetryGroup sl_subgroup(const SymmetryGroup& g);

// Closure of validated generators; raises NotASymmetry naming the violating
// monomial row.
SymmetryGroup subgroup_generated(const Polynomial& w,
                                 const std::vector<std::vector<Rational>>& gens);

SymmetryGroup trivial_group(const Polynomial& w);

// Monomials of the basis invariant under every generator (theta = 0).
std::vector<Monomial> invariant_monomials(const std::vector<Monomial>& basis,
                                          const SymmetryGroup& g,
                                          DetConvention conv = DetConvention::Full,
                                          const std::vector<bool>* sector_mask = nullptr);

struct WellBehavedCertificate {
    bool well_behaved = false;
    // variable index sets of the decomposition that worked (or the finest one
    // when the verdict is negative)
    std::vector<std::vector<size_t>> blocks;
    // per-block projections of G (the factors G_i), one list per block
    std::vector<std::vector<GroupElement>> block_factors;
    // on failure: offending (element, block index) from the finest partition
    std::optional<std::pair<GroupElement, size_t>> witness;
    std::string detail;
};

// Def-style check: some decomposition of W into admissible summands in
// disjoint variables such that G is the direct sum of block-supported
// factors, each acting all-or-none per block. Tries the finest (connected
// component) decomposition first, then coarser merges.
WellBehavedCertificate is_well_behaved(const Polynomial& w, const SymmetryGroup& g);

}  // namespace lgb

#endif
