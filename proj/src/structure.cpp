#include "lgb/structure.hpp"

#include "lgb/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lgb {

ExponentMatrix exponent_matrix(const Polynomial& w) {
    if (w.is_zero()) fail(ErrorCode::BadInput, "exponent matrix of the zero polynomial");
    ExponentMatrix a;
    a.nvars = w.nvars();
    for (const auto& [m, c] : w.terms()) a.rows.push_back(m);
    return a;
}

WeightVector compute_weights(const Polynomial& w) {
    ExponentMatrix a = exponent_matrix(w);
    const size_t m = a.nrows(), n = a.nvars;
    MatQ A(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) A(static_cast<int>(i), static_cast<int>(j)) = a.entry(i, j);
    VecQ b = VecQ::Constant(m, Rational(1));

    RationalSolve s = solve_rational(A, b);
    if (!s.consistent)
        fail(ErrorCode::NotQuasihomogeneous, "no rational weights solve A q = 1 for " + w.str());
    if (!s.unique)
        fail(ErrorCode::NonUniqueWeights, "weight system is rank deficient for " + w.str());

    WeightVector out;
    out.unique = true;
    for (size_t j = 0; j < n; ++j) {
        Rational q = s.solution(static_cast<int>(j));
        if (q <= 0 || q >= 1)
            fail(ErrorCode::WeightOutOfRange,
                 "weight q_" + std::to_string(j + 1) + " = " + to_string(q) + " outside (0,1)");
        out.q.push_back(q);
    }
    return out;
}

std::vector<Polynomial> jacobian(const Polynomial& w) {
    std::vector<Polynomial> j;
    for (size_t i = 0; i < w.nvars(); ++i) j.push_back(w.derivative(i));
    return j;
}

MonomialOrder quotient_order(const Polynomial& w) {
    try {
        return MonomialOrder::wdegrevlex(compute_weights(w).q);
    } catch (const Error&) {
        return MonomialOrder::degrevlex(w.nvars());
    }
}

GroebnerBasis jacobian_groebner(const Polynomial& w) {
    return buchberger(jacobian(w), quotient_order(w));
}

namespace {

bool has_constant_or_linear_part(const Polynomial& w, std::string* what = nullptr) {
    for (const auto& [m, c] : w.terms()) {
        long d = m.total_degree();
        if (d == 0) {
            if (what) *what = "constant term";
            return true;
        }
        if (d == 1) {
            if (what) *what = "linear term " + monomial_string(m, w.vars());
            return true;
        }
    }
    return false;
}

bool has_cross_term(const Polynomial& w, std::string* which = nullptr) {
    for (const auto& [m, c] : w.terms()) {
        if (m.total_degree() != 2) continue;
        int nonzero = 0;
        for (size_t i = 0; i < m.nvars(); ++i)
            if (m[i] != 0) ++nonzero;
        if (nonzero == 2) {
            if (which) *which = monomial_string(m, w.vars());
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_nondegenerate(const Polynomial& w) {
    std::string what;
    if (has_constant_or_linear_part(w, &what))
        fail(ErrorCode::BadInput, "nondegeneracy requires zero constant and linear part; found " + what);
    if (w.is_zero()) return w.nvars() == 0;
    return standard_monomials(jacobian_groebner(w)).finite;
}

AdmissibilityResult is_admissible(const Polynomial& w) {
    if (w.nvars() == 0) return {true, ""};  // empty convention
    if (w.is_zero()) return {false, "zero polynomial"};
    std::string what;
    if (has_constant_or_linear_part(w, &what)) return {false, "nonzero " + what};
    if (has_cross_term(w, &what)) return {false, "cross-term monomial " + what};
    if (!standard_monomials(jacobian_groebner(w)).finite)
        return {false, "degenerate: Jacobian quotient is infinite dimensional"};
    try {
        compute_weights(w);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return {true, ""};
}

const char* block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::Fermat: return "fermat";
        case BlockKind::Loop: return "loop";
        case BlockKind::Chain: return "chain";
        case BlockKind::NoninvertibleBlock: return "noninvertible-block";
    }
    return "?";
}

namespace {

// x_head^a * x_tail with a >= 2, nothing else
bool matches_link(const Monomial& m, size_t head, size_t tail, size_t nvars) {
    for (size_t v = 0; v < nvars; ++v) {
        if (v == head) {
            if (m[v] < 2) return false;
        } else if (v == tail) {
            if (m[v] != 1) return false;
        } else if (m[v] != 0) {
            return false;
        }
    }
    return true;
}

// pure power x_head^a with a >= 2
bool matches_pure(const Monomial& m, size_t head, size_t nvars) {
    for (size_t v = 0; v < nvars; ++v) {
        if (v == head) {
            if (m[v] < 2) return false;
        } else if (m[v] != 0) {
            return false;
        }
    }
    return true;
}

// Does the monomial multiset equal {x_{p1}^{a1} x_{p2}, ..., x_{pk}^{ak} x_{p1}}
// (loop) or {x_{p1}^{a1} x_{p2}, ..., x_{pk}^{ak}} (chain) for the given
// variable order p, with all a_i >= 2?
bool match_shape(const std::vector<Monomial>& mons, const std::vector<size_t>& p, bool loop,
                 size_t nvars) {
    const size_t k = p.size();
    if (mons.size() != k) return false;
    std::vector<bool> used(mons.size(), false);
    for (size_t i = 0; i < k; ++i) {
        const bool last = i + 1 == k;
        bool found = false;
        for (size_t t = 0; t < mons.size() && !found; ++t) {
            if (used[t]) continue;
            bool ok = (loop || !last) ? matches_link(mons[t], p[i], p[(i + 1) % k], nvars)
                                      : matches_pure(mons[t], p[i], nvars);
            if (ok) {
                used[t] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

AtomicDecomposition classify(const Polynomial& w) {
    AdmissibilityResult adm = is_admissible(w);
    if (!adm) fail(ErrorCode::NotAdmissible, adm.reason);

    const size_t n = w.nvars();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) -> size_t {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](size_t x, size_t y) { parent[find(x)] = find(y); };

    for (const auto& [m, c] : w.terms()) {
        size_t first = n;
        for (size_t v = 0; v < n; ++v)
            if (m[v] != 0) {
                if (first == n)
                    first = v;
                else
                    unite(first, v);
            }
    }

    std::vector<std::vector<size_t>> comp_vars;
    std::vector<size_t> comp_of(n, SIZE_MAX);
    for (size_t v = 0; v < n; ++v) {
        size_t r = find(v);
        size_t idx = SIZE_MAX;
        for (size_t c = 0; c < comp_vars.size(); ++c)
            if (find(comp_vars[c][0]) == r) idx = c;
        if (idx == SIZE_MAX) {
            comp_vars.push_back({});
            idx = comp_vars.size() - 1;
        }
        comp_vars[idx].push_back(v);
        comp_of[v] = idx;
    }

    AtomicDecomposition out;
    out.invertible = w.term_count() == n;

    for (const auto& vars_in_block : comp_vars) {
        Block b;
        b.variables = vars_in_block;
        b.summand = Polynomial(w.vars());
        std::vector<Monomial> mons;
        for (const auto& [m, c] : w.terms()) {
            size_t v = 0;
            while (m[v] == 0) ++v;
            if (comp_of[v] == comp_of[vars_in_block[0]]) {
                b.summand.add_term(m, c);
                mons.push_back(m);
            }
        }

        if (!out.invertible) {
            b.kind = BlockKind::NoninvertibleBlock;
            out.blocks.push_back(std::move(b));
            continue;
        }

        const size_t k = vars_in_block.size();
        if (k == 1) {
            // single monomial x^a, a >= 2 given admissibility
            b.kind = BlockKind::Fermat;
            b.shape_order = vars_in_block;
            out.blocks.push_back(std::move(b));
            continue;
        }

        std::vector<size_t> perm = vars_in_block;
        std::sort(perm.begin(), perm.end());
        bool matched = false;
        do {
            if (match_shape(mons, perm, /*loop=*/true, n)) {
                b.kind = BlockKind::Loop;
                b.shape_order = perm;
                matched = true;
            } else if (match_shape(mons, perm, /*loop=*/false, n)) {
                b.kind = BlockKind::Chain;
                b.shape_order = perm;
                matched = true;
            }
        } while (!matched && std::next_permutation(perm.begin(), perm.end()));
        if (!matched)
            fail(ErrorCode::Internal,
                 "invertible block failed fermat/loop/chain shape match: " + b.summand.str());
        out.blocks.push_back(std::move(b));
    }

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& x, const Block& y) { return x.variables[0] < y.variables[0]; });
    return out;
}

bool check_same_weights(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> wa = compute_weights(a).q;
    std::vector<Rational> wb = compute_weights(b).q;
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return wa == wb;
}

WebbResult webb_applicable(const Polynomial& w) {
    AdmissibilityResult adm = is_admissible(w);
    if (!adm) fail(ErrorCode::NotAdmissible, adm.reason);
    WeightVector wt = compute_weights(w);
    StandardMonomials sm = standard_monomials(jacobian_groebner(w));
    for (const auto& m : sm.monomials)
        if (m.weighted_degree(wt.q) == 1) return {false, m};
    return {true, std::nullopt};
}

}  // namespace lgb
