#include "lgb/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lgb {

namespace {

void check_shared_basis(const MilnorRing& a, const MilnorRing& b) {
    if (a.vars().size() != b.vars().size())
        fail(ErrorCode::BasisMismatch, "rings have different variable counts");
    if (a.weights() != b.weights())
        fail(ErrorCode::BasisMismatch, "rings have different weight vectors");
    if (a.mu() != b.mu()) fail(ErrorCode::BasisMismatch, "rings have different dimensions");
    for (size_t i = 0; i < a.mu(); ++i)
        if (!b.find_basis_index(a.basis()[i]))
            fail(ErrorCode::BasisMismatch,
                 "basis monomial " + a.basis_string(i) + " missing from target basis");
}

}  // namespace

FrobeniusMap diagonal_map(const RingPtr& source, const RingPtr& target,
                          const std::vector<Scalar>& constants) {
    check_shared_basis(*source, *target);
    if (constants.size() != source->mu()) fail(ErrorCode::BadInput, "need one constant per basis element");
    FrobeniusMap f;
    f.source_ring = source;
    f.target_ring = target;
    f.source = view_of(source, "Q[" + source->polynomial().str() + "]");
    f.target = view_of(target, "Q[" + target->polynomial().str() + "]");
    f.images.resize(source->mu());
    for (size_t i = 0; i < source->mu(); ++i) {
        f.images[i].assign(target->mu(), Scalar());
        f.images[i][target->basis_index(source->basis()[i])] = constants[i];
    }
    return f;
}

FrobeniusMap scaling_map(const RingPtr& source, const RingPtr& target,
                         const std::vector<Scalar>& var_constants) {
    if (var_constants.size() != source->vars().size())
        fail(ErrorCode::BadInput, "need one constant per variable");
    std::vector<Scalar> constants;
    for (const auto& m : source->basis()) {
        Scalar c{Rational(1)};
        for (size_t v = 0; v < var_constants.size(); ++v)
            if (m[v] != 0) c *= var_constants[v].pow(m[v]);
        constants.push_back(c);
    }
    return diagonal_map(source, target, constants);
}

// ---------------------------------------------------------------------------
// solve_scaling_iso
// ---------------------------------------------------------------------------

namespace {

std::string constraint_string(const ScalingConstraint& c, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c.u.size(); ++i) {
        if (c.u[i] == 0) continue;
        if (any) os << "*";
        os << "c_" << vars[i];
        if (c.u[i] != 1) os << "^" << c.u[i];
        any = true;
    }
    if (!any) os << "1";
    os << " = " << to_string(c.q);
    return os.str();
}

// Collects C(u) = q; returns false (infeasible) on a zero-pattern clash.
struct ConstraintSet {
    std::vector<ScalingConstraint> items;
    std::string clash;

    bool add(std::vector<long> u, const Rational& q, const std::string& origin) {
        if (q == 0) {
            clash = origin + ": forces a zero scaling constant";
            return false;
        }
        bool trivial = true;
        for (long e : u)
            if (e != 0) trivial = false;
        if (trivial) {
            if (q != 1) {
                clash = origin + ": 1 = " + to_string(q);
                return false;
            }
            return true;
        }
        items.push_back({std::move(u), q, origin});
        return true;
    }
};

Rational rational_power(const Rational& q, long e) {
    Rational r(1);
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

}  // namespace

ScalingSolveResult solve_scaling_iso(const RingPtr& source, const RingPtr& target,
                                     const std::string& symbol) {
    check_shared_basis(*source, *target);
    const size_t n = source->vars().size();
    const size_t mu = source->mu();

    ScalingSolveResult out;

    // target-side basis position of each source basis monomial
    std::vector<size_t> tpos(mu);
    for (size_t i = 0; i < mu; ++i) tpos[i] = target->basis_index(source->basis()[i]);

    auto exps = [&](const Monomial& m) {
        std::vector<long> u(n, 0);
        for (size_t v = 0; v < n; ++v) u[v] = m[v];
        return u;
    };
    auto diff = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> d(n);
        for (size_t v = 0; v < n; ++v) d[v] = a[v] - b[v];
        return d;
    };

    ConstraintSet pairing_set, product_set;

    // pairing oracle: C(a+b) = <a,b>_src / <a,b>_tgt
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = i; j < mu; ++j) {
            Scalar ps = source->pairing(i, j);
            Scalar pt = target->pairing(tpos[i], tpos[j]);
            if (ps.is_zero() != pt.is_zero()) {
                out.infeasibility = "pairing zero-pattern mismatch at <" + source->basis_string(i) +
                                    ", " + source->basis_string(j) + ">";
                out.pairing_constraints = pairing_set.items;
                return out;
            }
            if (ps.is_zero()) continue;
            std::vector<long> u = exps(source->basis()[i] * source->basis()[j]);
            if (!pairing_set.add(std::move(u), ps.rational_value() / pt.rational_value(),
                                 "pairing <" + source->basis_string(i) + ", " +
                                     source->basis_string(j) + ">")) {
                out.infeasibility = pairing_set.clash;
                out.pairing_constraints = pairing_set.items;
                return out;
            }
        }

    // product oracle: for NF(m_a m_b) = sum_k s_k m_k on both sides,
    // C(a+b-e_k) = s_k / t_k
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = i; j < mu; ++j) {
            std::vector<Scalar> src_row(mu, Scalar()), tgt_row(mu, Scalar());
            for (const auto& [k, c] : source->product_row(i, j)) src_row[k] = c;
            for (const auto& [k, c] : target->product_row(tpos[i], tpos[j]))
                tgt_row[k] = c;  // indexed by target positions
            for (size_t k = 0; k < mu; ++k) {
                const Scalar& s = src_row[k];
                const Scalar& t = tgt_row[tpos[k]];
                if (s.is_zero() != t.is_zero()) {
                    out.infeasibility = "product zero-pattern mismatch at " +
                                        source->basis_string(i) + " * " + source->basis_string(j) +
                                        " coefficient of " + source->basis_string(k);
                    out.product_constraints = product_set.items;
                    return out;
                }
                if (s.is_zero()) continue;
                std::vector<long> u =
                    diff(exps(source->basis()[i] * source->basis()[j]), exps(source->basis()[k]));
                if (!product_set.add(std::move(u), s.rational_value() / t.rational_value(),
                                     "product " + source->basis_string(i) + " * " +
                                         source->basis_string(j))) {
                    out.infeasibility = product_set.clash;
                    out.product_constraints = product_set.items;
                    return out;
                }
            }
        }

    out.pairing_constraints = pairing_set.items;
    out.product_constraints = product_set.items;

    // combined per-variable binomial solve
    std::vector<ScalingConstraint> all = pairing_set.items;
    all.insert(all.end(), product_set.items.begin(), product_set.items.end());

    std::vector<std::vector<std::pair<long, Rational>>> per_var(n);
    for (const auto& c : all) {
        long var = -1;
        for (size_t v = 0; v < n; ++v) {
            if (c.u[v] == 0) continue;
            if (var >= 0)
                fail(ErrorCode::NotBinomialSolvable,
                     "constraint couples several scaling unknowns: " +
                         constraint_string(c, source->vars()));
            var = static_cast<long>(v);
        }
        long e = c.u[static_cast<size_t>(var)];
        per_var[static_cast<size_t>(var)].emplace_back(
            e < 0 ? -e : e, e < 0 ? Rational(1) / c.q : c.q);
    }

    std::vector<Scalar> var_constants(n, Scalar(Rational(1)));
    for (size_t v = 0; v < n; ++v) {
        auto& cons = per_var[v];
        if (cons.empty()) continue;  // unconstrained, take c = 1

        // gcd chain with Bezout tracking: pin c^g exactly
        long g = cons[0].first;
        Rational val = cons[0].second;
        for (size_t t = 1; t < cons.size(); ++t) {
            long k = cons[t].first;
            long old_g = g;
            long x, y;  // x*old_g + y*k = new_g
            std::function<long(long, long, long&, long&)> xgcd = [&](long a, long b, long& xx,
                                                                     long& yy) -> long {
                if (b == 0) {
                    xx = 1;
                    yy = 0;
                    return a;
                }
                long x1, y1;
                long gg = xgcd(b, a % b, x1, y1);
                xx = y1;
                yy = x1 - (a / b) * y1;
                return gg;
            };
            g = xgcd(old_g, k, x, y);
            val = rational_power(val, x) * rational_power(cons[t].second, y);
        }
        // lattice consistency: (c^g)^(k/g) must reproduce every constraint
        for (const auto& [k, q] : cons) {
            if (rational_power(val, k / g) != q) {
                out.infeasibility = "inconsistent binomial system for c_" + source->vars()[v] +
                                    ": c^" + std::to_string(g) + " = " + to_string(val) +
                                    " contradicts c^" + std::to_string(k) + " = " + to_string(q);
                return out;
            }
        }

        VariableSolution sol;
        sol.var = v;
        sol.exponent = g;
        sol.value = val;
        BinomialRootResult root = root_of_binomial(static_cast<unsigned long>(g), val, symbol);
        sol.c = root.value;
        if (root.value.field()) {
            if (out.field && !out.field->same_field(*root.value.field()))
                fail(ErrorCode::NotBinomialSolvable,
                     "several scaling unknowns need distinct extension fields");
            out.field = root.value.field();
            if (!root.modulus_certified_irreducible) out.modulus_note = root.note;
        }
        out.solved.push_back(sol);
        var_constants[v] = sol.c;
    }

    // oracle agreement: the witness must satisfy the pairing-derived and the
    // product-derived constraints independently
    auto check_against = [&](const std::vector<ScalingConstraint>& set, const char* name) {
        for (const auto& c : set) {
            Scalar lhs{Rational(1)};
            for (size_t v = 0; v < n; ++v)
                if (c.u[v] != 0) lhs *= var_constants[v].pow(c.u[v]);
            if (!(lhs == Scalar(c.q)))
                fail(ErrorCode::Internal,
                     std::string(name) + " oracle disagrees with the solved constants at " +
                         constraint_string(c, source->vars()));
        }
    };
    check_against(pairing_set.items, "pairing");
    check_against(product_set.items, "product");

    out.map = scaling_map(source, target, var_constants);
    out.certificate = verify_frobenius_iso(*out.map);
    if (!out.certificate.pass())
        fail(ErrorCode::Internal, "solved scaling map failed its own certificate");
    out.found = true;
    return out;
}

// ---------------------------------------------------------------------------
// extension
// ---------------------------------------------------------------------------

ExtensionResult extend_isomorphism(const FrobeniusMap& phi, const SymmetryGroup& g,
                                   OrbifoldConventions conv) {
    if (!phi.source_ring || !phi.target_ring)
        fail(ErrorCode::PreconditionFailed, "extension needs a map between Milnor rings");
    const RingPtr& qw = phi.source_ring;
    const RingPtr& qv = phi.target_ring;

    // G must preserve both polynomials; rebuild it on each side
    std::vector<std::vector<Rational>> gen_phases;
    for (const auto& e : g.generators()) gen_phases.push_back(e.phases);
    SymmetryGroup gw = subgroup_generated(qw->polynomial(), gen_phases);
    SymmetryGroup gv = subgroup_generated(qv->polynomial(), gen_phases);

    IsoCertificate phi_cert = verify_frobenius_iso(phi);
    std::string eq_witness;
    bool phi_equivariant = is_equivariant(phi, gw, &eq_witness);
    if (!phi_cert.pass() || !phi_equivariant) {
        std::string msg = "phi is not an equivariant isomorphism:";
        for (const auto& w : phi_cert.witnesses) msg += " " + w + ";";
        if (!phi_equivariant) msg += " " + eq_witness;
        fail(ErrorCode::PreconditionFailed, msg);
    }

    ExtensionResult out;
    out.wb_source = is_well_behaved(qw->polynomial(), gw);
    out.wb_target = is_well_behaved(qv->polynomial(), gv);
    if (!out.wb_source.well_behaved)
        fail(ErrorCode::NotWellBehaved, "(W, G): " + out.wb_source.detail);
    if (!out.wb_target.well_behaved)
        fail(ErrorCode::NotWellBehaved, "(V, G): " + out.wb_target.detail);

    out.source_model = std::make_shared<const BModel>(qw->polynomial(), gw, conv);
    out.target_model = std::make_shared<const BModel>(qv->polynomial(), gv, conv);
    const BModel& src = *out.source_model;
    const BModel& tgt = *out.target_model;

    FrobeniusMap psi;
    psi.source_model = out.source_model;
    psi.target_model = out.target_model;
    psi.source = view_of(out.source_model, "B[W,G]");
    psi.target = view_of(out.target_model, "B[V,G]");
    psi.images.resize(src.dim());

    for (size_t i = 0; i < src.dim(); ++i) {
        const Monomial& m = src.monomial_of(i);
        const GroupElement& h = src.twist_of(i);
        auto widx = qw->find_basis_index(m);
        if (!widx)
            fail(ErrorCode::SectorImageMismatch,
                 "sector monomial " + src.label(i) + " is not a basis element of Q_W");

        // locate the matching target sector
        size_t tsec = SIZE_MAX;
        for (size_t s = 0; s < tgt.sectors().size(); ++s)
            if (tgt.sectors()[s].g == h) tsec = s;
        if (tsec == SIZE_MAX) fail(ErrorCode::Internal, "sector missing in target model");

        psi.images[i].assign(tgt.dim(), Scalar());
        const std::vector<Scalar>& coords = phi.images[*widx];
        for (size_t j = 0; j < coords.size(); ++j) {
            if (coords[j].is_zero()) continue;
            const Monomial& target_mon = qv->basis()[j];
            auto flat = tgt.find_basis(tsec, target_mon);
            if (!flat)
                fail(ErrorCode::SectorImageMismatch,
                     "phi(" + src.label(i) + ") involves " + target_mon.str(qv->vars()) +
                         " which does not lie in the target sector " + h.str());
            psi.images[i][*flat] = coords[j];
        }
    }

    out.certificate = verify_frobenius_iso(psi);
    // every basis element of either model is G-invariant, so psi is
    // trivially equivariant; record it explicitly
    out.certificate.equivariant = true;
    out.psi = std::move(psi);
    return out;
}

// ---------------------------------------------------------------------------
// tensor combination
// ---------------------------------------------------------------------------

SymmetryGroup product_group(const Polynomial& sum_poly, const SymmetryGroup& g1,
                            const SymmetryGroup& g2) {
    const size_t n1 = g1.nvars(), n2 = g2.nvars();
    if (sum_poly.nvars() != n1 + n2) fail(ErrorCode::VariableMismatch, "product group arity");
    std::vector<std::vector<Rational>> gens;
    for (const auto& e : g1.generators()) {
        std::vector<Rational> p = e.phases;
        p.resize(n1 + n2, Rational(0));
        gens.push_back(std::move(p));
    }
    for (const auto& e : g2.generators()) {
        std::vector<Rational> p(n1, Rational(0));
        p.insert(p.end(), e.phases.begin(), e.phases.end());
        gens.push_back(std::move(p));
    }
    return subgroup_generated(sum_poly, gens);
}

CombineResult combine_isomorphisms(const FrobeniusMap& f1, const FrobeniusMap& f2,
                                   const SymmetryGroup* g1, const SymmetryGroup* g2) {
    if (!f1.source_ring || !f1.target_ring || !f2.source_ring || !f2.target_ring)
        fail(ErrorCode::PreconditionFailed, "combine needs maps between Milnor rings");

    const MilnorRing& w1 = *f1.source_ring;
    const MilnorRing& w2 = *f2.source_ring;
    const MilnorRing& v1 = *f1.target_ring;
    const MilnorRing& v2 = *f2.target_ring;

    for (const auto& a : w1.vars())
        for (const auto& b : w2.vars())
            if (a == b) fail(ErrorCode::VariableMismatch, "summands share variable '" + a + "'");
    for (const auto& a : v1.vars())
        for (const auto& b : v2.vars())
            if (a == b) fail(ErrorCode::VariableMismatch, "target summands share variable '" + a + "'");

    IsoCertificate c1 = verify_frobenius_iso(f1), c2 = verify_frobenius_iso(f2);
    if (!c1.pass() || !c2.pass())
        fail(ErrorCode::PreconditionFailed, "factor maps must be verified isomorphisms");
    std::string w;
    if (g1 && !is_equivariant(f1, *g1, &w))
        fail(ErrorCode::PreconditionFailed, "f1 not equivariant: " + w);
    if (g2 && !is_equivariant(f2, *g2, &w))
        fail(ErrorCode::PreconditionFailed, "f2 not equivariant: " + w);

    auto sum_poly = [](const Polynomial& a, const Polynomial& b) {
        std::vector<std::string> vars = a.vars();
        vars.insert(vars.end(), b.vars().begin(), b.vars().end());
        std::vector<size_t> ia(a.nvars()), ib(b.nvars());
        std::iota(ia.begin(), ia.end(), 0);
        std::iota(ib.begin(), ib.end(), a.nvars());
        return a.embed(vars, ia) + b.embed(vars, ib);
    };

    CombineResult out;
    out.source_ring = std::make_shared<const MilnorRing>(sum_poly(w1.polynomial(), w2.polynomial()));
    out.target_ring = std::make_shared<const MilnorRing>(sum_poly(v1.polynomial(), v2.polynomial()));
    const MilnorRing& qw = *out.source_ring;
    const MilnorRing& qv = *out.target_ring;

    const size_t n1 = w1.vars().size(), n2 = w2.vars().size();

    auto split = [&](const Monomial& m) {
        std::vector<int> a(m.exponents().begin(), m.exponents().begin() + static_cast<long>(n1));
        std::vector<int> b(m.exponents().begin() + static_cast<long>(n1), m.exponents().end());
        return std::make_pair(Monomial(std::move(a)), Monomial(std::move(b)));
    };
    auto join = [&](const Monomial& a, const Monomial& b) {
        std::vector<int> e = a.exponents();
        e.insert(e.end(), b.exponents().begin(), b.exponents().end());
        return Monomial(std::move(e));
    };

    FrobeniusMap f;
    f.source_ring = out.source_ring;
    f.target_ring = out.target_ring;
    f.source = view_of(out.source_ring, "Q[" + qw.polynomial().str() + "]");
    f.target = view_of(out.target_ring, "Q[" + qv.polynomial().str() + "]");
    f.images.resize(qw.mu());

    for (size_t i = 0; i < qw.mu(); ++i) {
        auto [alpha, beta] = split(qw.basis()[i]);
        size_t ai = w1.basis_index(alpha);  // tensor staircase: must exist
        size_t bi = w2.basis_index(beta);
        f.images[i].assign(qv.mu(), Scalar());
        for (size_t j1 = 0; j1 < v1.mu(); ++j1) {
            if (f1.images[ai][j1].is_zero()) continue;
            for (size_t j2 = 0; j2 < v2.mu(); ++j2) {
                if (f2.images[bi][j2].is_zero()) continue;
                Monomial target_mon = join(v1.basis()[j1], v2.basis()[j2]);
                f.images[i][qv.basis_index(target_mon)] +=
                    f1.images[ai][j1] * f2.images[bi][j2];
            }
        }
    }

    out.certificate = verify_frobenius_iso(f);
    if (g1 && g2) {
        SymmetryGroup gprod = product_group(qw.polynomial(), *g1, *g2);
        std::string witness;
        out.certificate.equivariant = is_equivariant(f, gprod, &witness);
        if (!out.certificate.equivariant) out.certificate.witnesses.push_back(witness);
    }
    out.map = std::move(f);
    return out;
}

}  // namespace lgb
