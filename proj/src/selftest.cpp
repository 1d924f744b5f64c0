#include "lgb/selftest.hpp"

#include "lgb/equivalence.hpp"
#include "lgb/isomorphism.hpp"
#include "lgb/parse.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace lgb {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CriterionResult> results;

    template <typename F>
    void run(int number, const std::string& name, F&& body) {
        CriterionResult r;
        r.number = number;
        r.name = name;
        auto t0 = Clock::now();
        try {
            std::ostringstream detail;
            r.pass = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        results.push_back(std::move(r));
    }
};

Polynomial P(const std::string& text) { return parse_polynomial(text); }

Polynomial P(const std::string& text, std::vector<std::string> vars) {
    return parse_polynomial(text, std::move(vars));
}

std::set<std::vector<int>> monomial_set(const std::vector<Monomial>& ms) {
    std::set<std::vector<int>> s;
    for (const auto& m : ms) s.insert(m.exponents());
    return s;
}

const std::set<std::vector<int>> kGoldenBasis = {
    {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};

// Example-family polynomials (x^2 + y^2n, x^2 + xy^n + y^2n, x^2 + xy^n).
Polynomial family_w1(int n) { return P("x^2 + y^" + std::to_string(2 * n), {"x", "y"}); }
Polynomial family_w2(int n) {
    return P("x^2 + x*y^" + std::to_string(n) + " + y^" + std::to_string(2 * n), {"x", "y"});
}
Polynomial family_w3(int n) { return P("x^2 + x*y^" + std::to_string(n), {"x", "y"}); }

bool criterion1(std::ostringstream& out) {
    // x^4 + y^4: the staircase itself is the golden set
    auto sm1 = standard_monomials(jacobian_groebner(P("x^4 + y^4")));
    bool ok1 = sm1.finite && monomial_set(sm1.monomials) == kGoldenBasis;
    out << "x^4+y^4 staircase " << (ok1 ? "==" : "!=") << " golden set; ";

    // x^3y + xy^3: no monomial order realizes the golden set as a staircase
    // (y^3 > x^2y forces y^2 > x^2 while x^3 > xy^2 forces x^2 > y^2), so the
    // check verifies the cited claim itself: the nine classes form an exact
    // basis of the quotient.
    Polynomial w2 = P("x^3*y + x*y^3");
    GroebnerBasis gb = jacobian_groebner(w2);
    auto sm2 = standard_monomials(gb);
    if (!sm2.finite || sm2.monomials.size() != 9) {
        out << "x^3y+xy^3 quotient dimension != 9";
        return false;
    }
    MatS coords(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) coords(i, j) = Scalar();
    int col = 0;
    for (const auto& exps : kGoldenBasis) {
        Polynomial nf = normal_form(
            Polynomial::term(w2.vars(), Monomial(exps), Scalar(Rational(1))), gb);
        for (const auto& [m, c] : nf.terms()) {
            size_t row = 0;
            for (size_t k = 0; k < sm2.monomials.size(); ++k)
                if (sm2.monomials[k] == m) row = k;
            coords(static_cast<int>(row), col) = c;
        }
        ++col;
    }
    int rank = field_rank(coords);
    bool ok2 = rank == 9;
    out << "x^3y+xy^3: golden set spans rank " << rank << "/9 in the quotient (mu = 9); "
        << "the literal staircase reading is order-impossible (see notes)";
    return ok1 && ok2;
}

std::vector<std::string> corpus_texts() {
    return {
        // fermats and fermat sums
        "x^3", "x^4", "x^5", "x^6", "x^3 + y^3", "x^4 + y^4", "x^6 + y^3", "x^2 + y^6",
        "z^2 + w^2", "x^3 + y^3 + z^3", "x^4 + y^4 + z^4", "x^3 + y^3 + z^3 + w^3",
        // loops
        "x^2*y + x*y^2", "x^3*y + x*y^3", "x^2*y + x*y^4", "x^2*y + y^2*z + z^2*x",
        "x^2*y + y^3*z + z^2*x",
        // chains and chain sums
        "x^2*y + y^3", "x^3*y + y^4", "x^2*y + y^2*z + z^3", "x^2*y + y^2*z + z^2*w + w^3",
        "x^3 + y^3*z + z^4",
        // noninvertible
        "x^4 + x^2*y^2 + y^4", "x^6 + x^3*y^3 + y^6", "x^2 + x*y^3 + y^6",
        "x^2 + x*y^5 + y^10",
        // decoupled mixed sums
        "x^2 + y^6 + z^2 + w^2", "x^2 + x*y^3 + y^6 + z^2 + w^2",
    };
}

bool criterion2(std::ostringstream& out) {
    size_t count = 0;
    for (const auto& text : corpus_texts()) {
        Polynomial w = P(text);
        AdmissibilityResult adm = is_admissible(w);
        if (!adm) {
            out << text << " not admissible: " << adm.reason;
            return false;
        }
        WeightVector q = compute_weights(w);
        auto sm = standard_monomials(jacobian_groebner(w));
        if (!sm.finite) {
            out << text << ": infinite staircase";
            return false;
        }
        Rational formula(1);
        for (const auto& qi : q.q) formula *= Rational(1) / qi - 1;
        if (formula != Rational(static_cast<long>(sm.monomials.size()))) {
            out << text << ": staircase " << sm.monomials.size() << " != product formula "
                << to_string(formula);
            return false;
        }
        ++count;
    }
    out << count << " admissible polynomials: staircase count == prod(1/q_i - 1) exactly";
    return count >= 20;
}

bool criterion3(std::ostringstream& out) {
    size_t checked = 0;
    for (const auto& text : corpus_texts()) {
        Polynomial w = P(text);
        if (w.term_count() != w.nvars()) continue;  // invertible only
        ExponentMatrix a = exponent_matrix(w);
        MatQ A(a.nrows(), a.nvars);
        for (size_t i = 0; i < a.nrows(); ++i)
            for (size_t j = 0; j < a.nvars; ++j)
                A(static_cast<int>(i), static_cast<int>(j)) = Rational(a.entry(i, j));
        Rational det = A.determinant();
        SymmetryGroup g = max_symmetry_group(w);
        if (Rational(static_cast<long>(g.order())) != abs(det)) {
            out << text << ": |G| = " << g.order() << " but |det A| = " << to_string(abs(det));
            return false;
        }
        ++checked;
    }
    SymmetryGroup g1 = max_symmetry_group(P("x^4 + y^4"));
    SymmetryGroup g2 = max_symmetry_group(P("x^3*y + x*y^3"));
    out << checked << " invertible polynomials with |G_max| = |det A|; |G(x^4+y^4)| = "
        << g1.order() << ", |G(x^3y+xy^3)| = " << g2.order();
    return g1.order() == 16 && g2.order() == 8 && checked >= 10;
}

bool criterion4(std::ostringstream& out) {
    for (int n : {3, 5}) {
        auto qw1 = std::make_shared<const MilnorRing>(family_w1(n));
        auto qw2 = std::make_shared<const MilnorRing>(family_w2(n));
        auto qw3 = std::make_shared<const MilnorRing>(family_w3(n));

        for (const auto& ring : {qw1, qw2, qw3}) {
            std::set<std::vector<int>> expected;
            for (int a = 0; a <= 2 * n - 2; ++a) expected.insert({0, a});
            if (monomial_set(ring->basis()) != expected) {
                out << "n=" << n << ": basis of Q[" << ring->polynomial().str()
                    << "] is not {1, y, ..., y^" << 2 * n - 2 << "}";
                return false;
            }
        }

        struct PairSpec {
            RingPtr src, tgt;
            std::string tag;
            bool have_cited;
            Rational cited;
        };
        std::vector<PairSpec> pairs = {
            {qw1, qw3, "B1->B3", true, make_rational(3, 4)},
            {qw2, qw3, "B2->B3", true, make_rational(-3, 1)},
            {qw1, qw2, "B1->B2", false, Rational(0)},
        };

        for (const auto& pr : pairs) {
            ScalingSolveResult sol = solve_scaling_iso(pr.src, pr.tgt);
            if (!sol.found) {
                out << "n=" << n << " " << pr.tag << ": no scaling isomorphism found ("
                    << sol.infeasibility << ")";
                return false;
            }
            IsoCertificate phi_cert = verify_frobenius_iso(*sol.map);
            if (!phi_cert.pass() ||
                phi_cert.hessian_transport != IsoCertificate::Transport::Pass) {
                out << "n=" << n << " " << pr.tag
                    << ": phi certificate (incl. Hessian transport) failed";
                return false;
            }
            SymmetryGroup g_src = subgroup_generated(
                pr.src->polynomial(), {{make_rational(1, 2), make_rational(1, 2)}});
            std::string witness;
            if (!is_equivariant(*sol.map, g_src, &witness)) {
                out << "n=" << n << " " << pr.tag << ": not equivariant: " << witness;
                return false;
            }

            ExtensionResult ext = extend_isomorphism(*sol.map, g_src);
            if (!ext.certificate.pass()) {
                out << "n=" << n << " " << pr.tag << ": extension certificate failed:";
                for (const auto& w : ext.certificate.witnesses) out << " " << w << ";";
                return false;
            }

            for (const auto& v : sol.solved) {
                if (pr.src->vars()[v.var] != "y") continue;
                out << "n=" << n << " " << pr.tag << ": derived c^" << v.exponent << " = "
                    << to_string(v.value);
                if (pr.have_cited)
                    out << " (cited: " << to_string(pr.cited)
                        << ", normalization of the cited source not reproduced here)";
                out << "; ";
            }
        }
    }
    out << "all pairwise scaling + extension certificates pass for n in {3,5}";
    return true;
}

struct ModelSpec {
    std::string w;
    std::string group;
    std::string tag;
};

std::vector<ModelSpec> criterion5_models() {
    std::vector<ModelSpec> specs = {
        {"x^2 + y^6", "1/2,1/2", "B[x^2+y^6, <(1/2,1/2)>]"},
        {"x^4 + y^4", "1/4,3/4", "B[x^4+y^4, <(1/4,3/4)>]"},
        {"z^2 + w^2", "1/2,1/2", "B[z^2+w^2, <(1/2,1/2)>]"},
    };
    const std::vector<std::pair<std::string, std::string>> groups4 = {
        {"G1", ""},
        {"G2", "1/2,1/2,0,0"},
        {"G3", "0,0,1/2,1/2"},
        {"G4", "1/2,1/2,0,0;0,0,1/2,1/2"},
    };
    const std::vector<std::string> ws = {"x^2 + y^6 + z^2 + w^2",
                                         "x^2 + x*y^3 + y^6 + z^2 + w^2",
                                         "x^2 + x*y^3 + z^2 + w^2"};
    for (const auto& w : ws)
        for (const auto& [gname, gtext] : groups4)
            specs.push_back({w, gtext, "B[" + w + ", " + gname + "]"});
    return specs;
}

BModel build_model(const ModelSpec& spec, OrbifoldConventions conv = {}) {
    Polynomial w = P(spec.w);
    SymmetryGroup g = spec.group.empty()
                          ? trivial_group(w)
                          : subgroup_generated(w, parse_group_generators(spec.group));
    return BModel(w, g, conv);
}

bool criterion5(std::ostringstream& out) {
    size_t count = 0;
    for (const auto& spec : criterion5_models()) {
        BModel model = build_model(spec);
        if (spec.tag == "B[x^2+y^6, <(1/2,1/2)>]" && model.dim() != 4) {
            out << spec.tag << ": dim " << model.dim() << " != 4";
            return false;
        }
        BModelAxiomReport rep = verify_bmodel_axioms(model);
        if (!rep.pass) {
            out << spec.tag << " failed: " << rep.failures.front();
            return false;
        }
        ++count;
    }
    out << count << " models pass associativity, commutativity, identity, Frobenius, "
        << "degree additivity and pairing nondegeneracy exhaustively";
    return true;
}

bool criterion6(std::ostringstream& out) {
    Polynomial wsum = P("x^2 + y^6 + z^2 + w^2");
    Polynomial w1 = P("x^2 + y^6");
    Polynomial v0 = P("z^2 + w^2");

    const std::vector<std::pair<std::string, std::string>> parts = {
        {"", ""}, {"1/2,1/2", ""}, {"", "1/2,1/2"}, {"1/2,1/2", "1/2,1/2"}};
    const std::vector<std::string> combined_gens = {
        "", "1/2,1/2,0,0", "0,0,1/2,1/2", "1/2,1/2,0,0;0,0,1/2,1/2"};

    for (size_t i = 0; i < parts.size(); ++i) {
        SymmetryGroup gw = parts[i].first.empty()
                               ? trivial_group(w1)
                               : subgroup_generated(w1, parse_group_generators(parts[i].first));
        SymmetryGroup gv = parts[i].second.empty()
                               ? trivial_group(v0)
                               : subgroup_generated(v0, parse_group_generators(parts[i].second));
        SymmetryGroup gprod = product_group(wsum, gw, gv);

        BModel big(wsum, gprod);
        BModel fw(w1, gw);
        BModel fv(v0, gv);
        if (big.dim() != fw.dim() * fv.dim()) {
            out << "G" << i + 1 << ": dim " << big.dim() << " != " << fw.dim() << " * "
                << fv.dim();
            return false;
        }
        out << "dim B[W+V, G" << i + 1 << "] = " << big.dim() << " = " << fw.dim() << "*"
            << fv.dim() << "; ";
    }

    // combined-then-extended isomorphism
    auto qw1 = std::make_shared<const MilnorRing>(w1);
    auto qw3 = std::make_shared<const MilnorRing>(P("x^2 + x*y^3"));
    auto qv = std::make_shared<const MilnorRing>(v0);
    ScalingSolveResult sol = solve_scaling_iso(qw1, qw3);
    if (!sol.found) {
        out << "factor scaling iso not found";
        return false;
    }
    FrobeniusMap id = identity_map(qv);
    SymmetryGroup g2 = subgroup_generated(w1, parse_group_generators("1/2,1/2"));
    SymmetryGroup h2 = subgroup_generated(v0, parse_group_generators("1/2,1/2"));
    CombineResult comb = combine_isomorphisms(*sol.map, id, &g2, &h2);
    if (!comb.certificate.pass()) {
        out << "combined map certificate failed";
        return false;
    }
    for (const auto& gens : combined_gens) {
        SymmetryGroup g = gens.empty()
                              ? trivial_group(comb.source_ring->polynomial())
                              : subgroup_generated(comb.source_ring->polynomial(),
                                                   parse_group_generators(gens));
        ExtensionResult ext = extend_isomorphism(comb.map, g);
        if (!ext.certificate.pass()) {
            out << "combined-then-extended certificate failed for generators '" << gens << "'";
            return false;
        }
    }
    out << "combined-then-extended certificates pass for G1..G4";
    return true;
}

bool criterion7(std::ostringstream& out) {
    // The criterion demands a GB = {1} refutation for (x^4+y^4, x^3y+xy^3).
    // That certificate cannot exist: the pair is linearly equivalent over C
    // via x -> (x + ty)/s, y -> (x - ty)/s with t^4 = -1, s^4 = 2 (verified
    // exactly), so the saturated coefficient system is consistent. The
    // criterion is run faithfully and reported as it falls out.
    bool refuted = false;
    std::string refute_note;
    try {
        EquivalenceResult refute = search_linear_equivalence(P("x^4 + y^4"), P("x^3*y + x*y^3"));
        refuted = !refute.equivalent && refute.refuted_by_unit_ideal;
        refute_note = refute.detail;
        if (refute.equivalent && refute.witness)
            refute_note = "equivalence witness found: " + refute.witness->str();
    } catch (const Error& e) {
        refute_note = e.what();
    }

    EquivalenceResult found = search_linear_equivalence(P("x^2 + y^6"), P("x^2 + x*y^3"));
    bool witness_ok = found.equivalent && found.witness.has_value();

    out << "witness half: " << (witness_ok ? "pass" : "FAIL");
    if (witness_ok)
        out << " (" << found.witness->str()
            << (found.field ? " over Q[c]/(" + found.field->modulus_string() + ")" : "")
            << ", verified by exact expansion)";
    out << "; refutation half: " << (refuted ? "pass" : "FAIL") << " (" << refute_note
        << "). The demanded GB = {1} certificate is unattainable: the pair is linearly "
        << "equivalent over C (see the project notes for the explicit substitution), so the "
        << "consistent system is the mathematically correct outcome.";
    return refuted && witness_ok;
}

bool criterion8(std::ostringstream& out) {
    WebbResult a = webb_applicable(P("x^4 + y^4"));
    WebbResult b = webb_applicable(P("x^2 + y^6"));
    bool witness_ok =
        !a.applicable && a.witness && a.witness->exponents() == std::vector<int>{2, 2};
    out << "x^4+y^4: not applicable, witness "
        << (a.witness ? a.witness->str({"x", "y"}) : "(none)") << " of weighted degree 1; "
        << "x^2+y^6: " << (b.applicable ? "applicable" : "not applicable");
    return witness_ok && b.applicable;
}

bool criterion9(std::ostringstream& out) {
    ModelSpec spec{"x^2 + y^6", "1/2,1/2", "B[x^2+y^6, <(1/2,1/2)>]"};

    OrbifoldConventions mu_bad;
    mu_bad.gamma_mu = OrbifoldConventions::GammaMu::Inverted;
    BModelAxiomReport rep1 = verify_bmodel_axioms(build_model(spec, mu_bad));
    if (rep1.pass || rep1.failures.empty()) {
        out << "inverted gamma mu ratio was not detected";
        return false;
    }

    OrbifoldConventions drop_bad;
    drop_bad.restriction = OrbifoldConventions::Restriction::DropUnfixedExponents;
    BModelAxiomReport rep2 = verify_bmodel_axioms(build_model(spec, drop_bad));
    if (rep2.pass || rep2.failures.empty()) {
        out << "broken restriction-map convention was not detected";
        return false;
    }

    out << "gamma mu mutation: " << rep1.failures.size()
        << " failures, first: " << rep1.failures.front()
        << " | restriction mutation: " << rep2.failures.size()
        << " failures, first: " << rep2.failures.front();
    return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    Runner r;
    r.run(1, "milnor-basis-golden", criterion1);
    r.run(2, "dimension-identity", criterion2);
    r.run(3, "symmetry-orders", criterion3);
    r.run(4, "example-family-pipeline", criterion4);
    r.run(5, "bmodel-axiom-suite", criterion5);
    r.run(6, "tensor-criterion", criterion6);
    r.run(7, "equivalence-search", criterion7);
    r.run(8, "webb-precondition", criterion8);
    r.run(9, "mutation-sensitivity", criterion9);
    return r.results;
}

std::string format_criterion(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.number << " " << r.name << " ("
       << static_cast<long>(r.ms + 0.5) << " ms)";
    if (!r.detail.empty()) os << ": " << r.detail;
    return os.str();
}

}  // namespace lgb
