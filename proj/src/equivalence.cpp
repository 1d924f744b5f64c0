#include "lgb/equivalence.hpp"

#include "lgb/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace lgb {

std::string Substitution::str() const {
    std::ostringstream os;
    for (size_t j = 0; j < target_vars.size(); ++j) {
        if (j) os << ", ";
        os << target_vars[j] << " -> " << images[j].str();
    }
    return os.str();
}

namespace {

// monomials over vars with exact weighted degree p
std::vector<Monomial> monomials_of_weight(const std::vector<Rational>& w, const Rational& p) {
    std::vector<Monomial> out;
    Monomial current(w.size());
    std::function<void(size_t, Rational)> rec = [&](size_t i, Rational remaining) {
        if (i == w.size()) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (int e = 0;; ++e) {
            Rational used = Rational(e) * w[i];
            if (used > remaining) break;
            current[i] = e;
            rec(i + 1, remaining - used);
        }
        current[i] = 0;
    };
    rec(0, p);
    return out;
}

// determinant of a small matrix of polynomials by permutation expansion
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m,
                    const std::vector<std::string>& vars) {
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Polynomial det(vars);
    do {
        // permutation sign
        int sign = 1;
        std::vector<size_t> p = perm;
        for (size_t i = 0; i < n; ++i)
            while (p[i] != i) {
                std::swap(p[i], p[p[i]]);
                sign = -sign;
            }
        Polynomial term = Polynomial::constant(vars, Scalar(Rational(sign)));
        bool zero = false;
        for (size_t i = 0; i < n && !zero; ++i) {
            if (m[i][perm[i]].is_zero()) zero = true;
            term = term * m[i][perm[i]];
        }
        if (!zero) det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

struct Extractor {
    std::vector<std::string> uvars;      // unknowns only (no saturation var)
    std::vector<Polynomial> system;      // over uvars
    size_t budget = 5000;
    FieldPtr field;                      // at most one extension
    std::vector<std::optional<Scalar>> assignment;

    bool exhausted = false;

    Polynomial substitute(const Polynomial& p) const {
        // replace assigned variables by their values
        Polynomial r(p.vars());
        for (const auto& [m, c] : p.terms()) {
            Scalar coeff = c;
            Monomial rest(m.nvars());
            bool dead = false;
            for (size_t v = 0; v < m.nvars() && !dead; ++v) {
                if (m[v] == 0) continue;
                if (assignment[v]) {
                    if (assignment[v]->is_zero())
                        dead = true;
                    else
                        coeff *= assignment[v]->pow(m[v]);
                } else {
                    rest[v] = m[v];
                }
            }
            if (!dead) r.add_term(rest, coeff);
        }
        return r;
    }

    // support of a polynomial in unassigned variables
    std::vector<size_t> support(const Polynomial& p) const {
        std::vector<bool> seen(uvars.size(), false);
        for (const auto& [m, c] : p.terms())
            for (size_t v = 0; v < m.nvars(); ++v)
                if (m[v] != 0) seen[v] = true;
        std::vector<size_t> s;
        for (size_t v = 0; v < uvars.size(); ++v)
            if (seen[v]) s.push_back(v);
        return s;
    }

    // candidate roots of a univariate (in variable v) polynomial
    std::vector<Scalar> candidate_roots(const Polynomial& p, size_t v) {
        std::map<int, Scalar> coeff;  // exponent -> coefficient
        int deg = 0;
        for (const auto& [m, c] : p.terms()) {
            coeff[m[v]] = c;
            deg = std::max(deg, m[v]);
        }
        std::vector<Scalar> roots;
        auto cf = [&](int e) { return coeff.count(e) ? coeff[e] : Scalar(); };

        if (deg == 1) {
            roots.push_back(-cf(0) / cf(1));
            return roots;
        }

        bool rational_coeffs = true;
        for (const auto& [e, c] : coeff)
            if (!c.is_rational()) rational_coeffs = false;

        if (rational_coeffs) {
            // rational root candidates p/q with p | num(a0 * L), q | num(ad * L)
            Integer a0_num, ad_num;
            {
                // clear denominators
                Integer lcm_den(1);
                for (const auto& [e, c] : coeff) {
                    Integer d = c.rational_value().get_den();
                    lcm_den = lcm_den / gcd(lcm_den, d) * d;
                }
                Rational a0 = cf(0).rational_value() * Rational(lcm_den);
                Rational ad = cf(deg).rational_value() * Rational(lcm_den);
                a0_num = a0.get_num();
                ad_num = ad.get_num();
            }
            auto divisors = [](Integer x) {
                std::vector<Integer> ds;
                x = abs(x);
                if (x == 0) return ds;
                for (Integer d(1); d * d <= x && ds.size() < 64; d += 1)
                    if (x % d == 0) {
                        ds.push_back(d);
                        if (d * d != x) ds.push_back(x / d);
                    }
                return ds;
            };
            if (a0_num == 0) roots.push_back(Scalar(Rational(0)));
            for (const Integer& p_ : divisors(a0_num))
                for (const Integer& q_ : divisors(ad_num)) {
                    Rational r = make_rational(p_, q_);
                    for (int sign = 0; sign < 2; ++sign) {
                        Rational cand = sign ? -r : r;
                        // evaluate
                        Scalar acc;
                        for (const auto& [e, c] : coeff) acc += c * Scalar(rational_power_local(cand, e));
                        if (acc.is_zero()) roots.push_back(Scalar(cand));
                    }
                }
            std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) {
                return a.rational_value() > b.rational_value();
            });
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

            // pure binomial v^k = q: adjoin an extension if none present yet
            if (roots.empty() && !field && coeff.size() == 2 && coeff.count(0) && coeff.count(deg)) {
                Rational q = -(cf(0).rational_value() / cf(deg).rational_value());
                BinomialRootResult rr =
                    root_of_binomial(static_cast<unsigned long>(deg), q, fresh_symbol());
                roots.push_back(rr.value);
            }
        }
        return roots;
    }

    static Rational rational_power_local(const Rational& q, long e) {
        Rational r(1);
        Rational base = q;
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }

    std::string fresh_symbol() const {
        std::string s = "c";
        for (const auto& v : uvars)
            if (v == s) s = "c0";
        return s;
    }

    bool solve() {
        if (budget-- == 0) {
            exhausted = true;
            return false;
        }

        // substitute and scan
        std::vector<Polynomial> live;
        for (const auto& p : system) {
            Polynomial s = substitute(p);
            if (s.is_zero()) continue;
            if (support(s).empty()) return false;  // nonzero constant: contradiction
            live.push_back(std::move(s));
        }
        // pick the unassigned variable of highest index (lex-smallest)
        long pick = -1;
        for (long v = static_cast<long>(uvars.size()) - 1; v >= 0; --v)
            if (!assignment[static_cast<size_t>(v)]) {
                pick = v;
                break;
            }
        if (pick < 0) return true;  // all assigned, all equations vanished
        size_t v = static_cast<size_t>(pick);

        // univariate equations in v
        std::vector<Polynomial> uni;
        for (const auto& p : live) {
            auto s = support(p);
            if (s.size() == 1 && s[0] == v) uni.push_back(p);
        }

        std::vector<Scalar> candidates;
        if (!uni.empty()) {
            // smallest degree first
            std::sort(uni.begin(), uni.end(), [&](const Polynomial& a, const Polynomial& b) {
                int da = 0, db = 0;
                for (const auto& [m, c] : a.terms()) da = std::max(da, m[v]);
                for (const auto& [m, c] : b.terms()) db = std::max(db, m[v]);
                return da < db;
            });
            candidates = candidate_roots(uni[0], v);
        } else {
            // free variable: deterministic candidate list
            for (long val : {1L, -1L, 2L, -2L, 0L}) candidates.push_back(Scalar(Rational(val)));
        }

        for (const Scalar& cand : candidates) {
            FieldPtr saved_field = field;
            if (cand.field()) field = cand.field();
            assignment[v] = cand;
            bool ok = true;
            // all univariate equations must vanish at the candidate
            for (const auto& p : uni) {
                Polynomial s = substitute(p);
                if (!s.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok && solve()) return true;
            assignment[v].reset();
            field = saved_field;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

EquivalenceResult search_linear_equivalence(const Polynomial& w1, const Polynomial& w2) {
    {
        AdmissibilityResult a1 = is_admissible(w1);
        if (!a1) fail(ErrorCode::NotAdmissible, "W1: " + a1.reason);
        AdmissibilityResult a2 = is_admissible(w2);
        if (!a2) fail(ErrorCode::NotAdmissible, "W2: " + a2.reason);
    }
    WeightVector q1 = compute_weights(w1);
    WeightVector q2 = compute_weights(w2);
    {
        std::vector<Rational> s1 = q1.q, s2 = q2.q;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2)
            fail(ErrorCode::WeightMismatch, "unordered weight multisets differ; no equivalence");
    }

    EquivalenceResult out;

    if (w1 == w2) {
        Substitution id;
        id.source_vars = w1.vars();
        id.target_vars = w2.vars();
        for (size_t j = 0; j < w1.nvars(); ++j) id.images.push_back(Polynomial::variable(w1.vars(), j));
        out.equivalent = true;
        out.witness = std::move(id);
        out.detail = "identical polynomials, identity substitution";
        return out;
    }

    const size_t n1 = w1.nvars(), n2 = w2.nvars();

    // unknown coefficients u_{j,m} for each target variable j and each
    // source monomial m of the matching weight
    struct UnknownInfo {
        size_t target_var;
        Monomial source_mon;
    };
    std::vector<UnknownInfo> unknowns;
    std::vector<std::vector<std::pair<size_t, Monomial>>> per_image(n2);  // (unknown idx, monomial)
    for (size_t j = 0; j < n2; ++j) {
        for (const auto& m : monomials_of_weight(q1.q, q2.q[j])) {
            per_image[j].emplace_back(unknowns.size(), m);
            unknowns.push_back({j, m});
        }
    }

    // combined polynomial ring: source vars, then unknowns, then the
    // saturation variable
    std::vector<std::string> all_vars = w1.vars();
    std::vector<std::string> uvars;
    for (size_t t = 0; t < unknowns.size(); ++t)
        uvars.push_back("u" + std::to_string(t));
    const std::string esat = "e_sat";
    all_vars.insert(all_vars.end(), uvars.begin(), uvars.end());
    all_vars.push_back(esat);
    const size_t nu = uvars.size();

    auto uvar_poly = [&](size_t t) {
        return Polynomial::variable(all_vars, n1 + t);
    };

    // h images inside the combined ring
    std::vector<Polynomial> images;
    for (size_t j = 0; j < n2; ++j) {
        Polynomial img(all_vars);
        for (const auto& [t, m] : per_image[j]) {
            Monomial full(all_vars.size());
            for (size_t v = 0; v < n1; ++v) full[v] = m[v];
            full[n1 + t] = 1;
            img.add_term(full, Scalar(Rational(1)));
        }
        images.push_back(std::move(img));
    }

    // W1 = W2 o h, coefficientwise in the source monomials
    std::vector<size_t> embed_map(n1);
    for (size_t v = 0; v < n1; ++v) embed_map[v] = v;
    Polynomial defect = w2.compose(images) - w1.embed(all_vars, embed_map);

    // collect equations: coefficients of each source-monomial slice
    std::map<Monomial, Polynomial> equations;  // key: source part
    for (const auto& [m, c] : defect.terms()) {
        Monomial src(n1);
        Monomial rest(all_vars.size());
        for (size_t v = 0; v < n1; ++v) src[v] = m[v];
        for (size_t v = n1; v < all_vars.size(); ++v) rest[v] = m[v];
        auto [it, fresh] = equations.emplace(src, Polynomial(all_vars));
        it->second.add_term(rest, c);
    }

    // invertibility saturation: det of the linear part within weight-equal
    // variable groups
    std::vector<std::vector<Polynomial>> lin(n2, std::vector<Polynomial>(n1));
    for (size_t j = 0; j < n2; ++j)
        for (size_t v = 0; v < n1; ++v) {
            lin[j][v] = Polynomial(all_vars);
            for (const auto& [t, m] : per_image[j]) {
                bool is_var = m.total_degree() == 1 && m[v] == 1;
                if (is_var) lin[j][v] = uvar_poly(t);
            }
        }
    Polynomial det = poly_det(lin, all_vars);
    Polynomial saturation =
        Polynomial::variable(all_vars, all_vars.size() - 1) * det -
        Polynomial::constant(all_vars, Scalar(Rational(1)));

    std::vector<Polynomial> system;
    for (auto& [src, eq] : equations) system.push_back(eq);
    system.push_back(saturation);

    if (ideal_is_unit(system)) {
        out.equivalent = false;
        out.refuted_by_unit_ideal = true;
        out.detail = "coefficient system with invertibility saturation has Groebner basis {1}";
        return out;
    }

    // lex Groebner basis with e_sat largest: elements free of e_sat generate
    // the saturated coefficient ideal and are triangular enough to extract
    std::vector<std::string> elim_vars;
    elim_vars.push_back(esat);
    elim_vars.insert(elim_vars.end(), uvars.begin(), uvars.end());
    // source vars are gone from the system; map unknowns and e_sat
    {
        std::vector<Polynomial> shrunk;
        for (const auto& p : system) {
            Polynomial q(elim_vars);
            for (const auto& [m, c] : p.terms()) {
                Monomial t(elim_vars.size());
                t[0] = m[n1 + nu];
                for (size_t v = 0; v < nu; ++v) t[1 + v] = m[n1 + v];
                q.add_term(t, c);
            }
            shrunk.push_back(std::move(q));
        }
        system = std::move(shrunk);
    }
    GroebnerBasis lexgb = buchberger(system, MonomialOrder::lex());

    Extractor ex;
    ex.uvars = uvars;
    ex.assignment.assign(nu, std::nullopt);
    for (const auto& g : lexgb.gens) {
        bool has_e = false;
        for (const auto& [m, c] : g.terms())
            if (m[0] != 0) has_e = true;
        if (has_e) continue;
        // drop the e_sat slot
        Polynomial q(uvars);
        for (const auto& [m, c] : g.terms()) {
            Monomial t(nu);
            for (size_t v = 0; v < nu; ++v) t[v] = m[1 + v];
            q.add_term(t, c);
        }
        ex.system.push_back(std::move(q));
    }

    if (!ex.solve()) {
        if (ex.exhausted)
            fail(ErrorCode::SearchInconclusive,
                 "coefficient system is solvable but witness extraction exceeded its budget");
        fail(ErrorCode::SearchInconclusive,
             "the saturated coefficient system is consistent (an invertible weighted "
             "substitution exists over the algebraic closure), but no witness lies in the "
             "supported single-extension fields");
    }

    // assemble and re-verify the witness
    Substitution sub;
    sub.source_vars = w1.vars();
    sub.target_vars = w2.vars();
    for (size_t j = 0; j < n2; ++j) {
        Polynomial img(w1.vars());
        for (const auto& [t, m] : per_image[j]) {
            Scalar c = *ex.assignment[t];
            if (!c.is_zero()) img.add_term(m, c);
        }
        sub.images.push_back(std::move(img));
    }
    if (!(w2.compose(sub.images) == w1))
        fail(ErrorCode::Internal, "extracted witness fails exact re-verification");

    out.equivalent = true;
    out.field = ex.field;
    out.witness = std::move(sub);
    out.detail = "witness substitution verified by exact expansion";
    return out;
}

}  // namespace lgb
