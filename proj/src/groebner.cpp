#include "lgb/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lgb {

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    auto [lm, lc] = p.leading_term(order);
    return lc.is_one() ? p : p.scaled(lc.inverse());
}

Polynomial reduce_fully(Polynomial h, const std::vector<Polynomial>& basis,
                        const MonomialOrder& order) {
    Polynomial r(h.vars());
    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(order);
        bool reduced = false;
        for (const auto& g : basis) {
            auto [glm, glc] = g.leading_term(order);
            if (glm.divides(lm)) {
                Monomial q = lm / glm;
                h -= g.scaled(lc / glc) * Polynomial::term(h.vars(), q, Scalar(Rational(1)));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lm, lc);
            Polynomial t = Polynomial::term(h.vars(), lm, lc);
            h -= t;
        }
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [fm, fc] = f.leading_term(order);
    auto [gm, gc] = g.leading_term(order);
    Monomial l = Monomial::lcm(fm, gm);
    Polynomial a = f.scaled(fc.inverse()) * Polynomial::term(f.vars(), l / fm, Scalar(Rational(1)));
    Polynomial b = g.scaled(gc.inverse()) * Polynomial::term(g.vars(), l / gm, Scalar(Rational(1)));
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order) {
    std::vector<std::string> vars;
    bool have_vars = false;
    for (const auto& g : generators) {
        if (!have_vars) {
            vars = g.vars();
            have_vars = true;
        } else if (g.vars() != vars) {
            fail(ErrorCode::VariableMismatch, "generators over different ambient variable lists");
        }
    }
    if (order.kind == MonomialOrder::Kind::WDegRevLex && order.weights.size() != vars.size())
        fail(ErrorCode::BadInput, "order weight count does not match variable count");

    std::vector<Polynomial> basis;
    for (auto& g : generators)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));

    // deterministic starting configuration
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });

    GroebnerBasis out;
    out.vars = vars;
    out.order = std::move(order);
    if (basis.empty()) return out;
    const MonomialOrder& ord = out.order;

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) { return ord.less(a.lcm, b.lcm); };

    std::vector<Pair> pending;
    std::set<std::pair<size_t, size_t>> unprocessed;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].leading_term(ord).first,
                                       basis[j].leading_term(ord).first);
            pending.push_back({i, j, l});
            unprocessed.insert({i, j});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        unprocessed.erase({p.i, p.j});

        const Monomial lmi = basis[p.i].leading_term(ord).first;
        const Monomial lmj = basis[p.j].leading_term(ord).first;
        // first criterion: coprime leading monomials
        if (lmi.coprime_with(lmj)) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].leading_term(ord).first.divides(p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (!unprocessed.count({key_ik.first, key_ik.second}) &&
                !unprocessed.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[p.i], basis[p.j], ord);
        Polynomial r = reduce_fully(std::move(s), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r, ord));
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another one
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial lmi = basis[i].leading_term(ord).first;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial lmj = basis[j].leading_term(ord).first;
            if (lmj.divides(lmi) && !(lmi == lmj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // inter-reduce tails
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_fully(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(make_monic(r, ord));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    out.gens = std::move(reduced);
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.vars() != gb.vars)
        fail(ErrorCode::VariableMismatch, "normal form: variable lists differ");
    return reduce_fully(p, gb.gens, gb.order);
}

StandardMonomials standard_monomials(const GroebnerBasis& gb) {
    StandardMonomials out;
    const size_t n = gb.vars.size();

    if (gb.is_unit_ideal()) {
        out.finite = true;  // zero ring, empty staircase complement
        return out;
    }

    std::vector<Monomial> lts;
    for (const auto& g : gb.gens) lts.push_back(g.leading_term(gb.order).first);

    // finite iff every variable has a pure-power leading term
    std::vector<int> bound(n, -1);
    for (const auto& lt : lts) {
        size_t nz = 0, var = 0;
        for (size_t i = 0; i < n; ++i)
            if (lt[i] != 0) {
                ++nz;
                var = i;
            }
        if (nz == 1 && (bound[var] < 0 || lt[var] < bound[var])) bound[var] = lt[var];
    }
    for (size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return out;  // infinite

    out.finite = true;
    Monomial m(n);
    std::function<void(size_t)> walk = [&](size_t i) {
        if (i == n) {
            for (const auto& lt : lts)
                if (lt.divides(m)) return;
            out.monomials.push_back(m);
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            m[i] = e;
            walk(i + 1);
        }
        m[i] = 0;
    };
    walk(0);

    std::vector<Rational> w = gb.order.kind == MonomialOrder::Kind::WDegRevLex
                                  ? gb.order.weights
                                  : std::vector<Rational>(n, Rational(1));
    std::sort(out.monomials.begin(), out.monomials.end(),
              [&](const Monomial& a, const Monomial& b) {
                  Rational da = a.weighted_degree(w), db = b.weighted_degree(w);
                  if (da != db) return da < db;
                  return gb.order.less(a, b);
              });
    return out;
}

bool ideal_is_unit(const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> gens;
    for (const auto& g : generators)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) return false;
    GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex(gens[0].nvars()));
    return gb.is_unit_ideal();
}

}  // namespace lgb
