#include "lgb/report.hpp"

#include <sstream>

namespace lgb {

Json scalar_json(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rational_value());
    Json j;
    j["symbol"] = s.field()->symbol();
    j["modulus"] = s.field()->modulus_string();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = coeffs;
    j["value"] = s.str();
    return j;
}

Json rational_list_json(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& q : v) j.push_back(to_string(q));
    return j;
}

Json polynomial_json(const Polynomial& p) {
    Json j;
    j["text"] = p.str();
    Json vars = Json::array();
    for (const auto& v : p.vars()) vars.push_back(v);
    j["vars"] = vars;
    j["terms"] = p.term_count();
    return j;
}

Json weights_json(const WeightVector& w) {
    Json j;
    j["q"] = rational_list_json(w.q);
    j["unique"] = w.unique;
    return j;
}

Json decomposition_json(const AtomicDecomposition& d, const Polynomial& w) {
    Json j;
    j["invertible"] = d.invertible;
    Json blocks = Json::array();
    for (const auto& b : d.blocks) {
        Json jb;
        Json vars = Json::array();
        for (size_t v : b.variables) vars.push_back(w.vars()[v]);
        jb["variables"] = vars;
        jb["summand"] = b.summand.str();
        jb["kind"] = block_kind_name(b.kind);
        blocks.push_back(jb);
    }
    j["blocks"] = blocks;
    return j;
}

Json group_json(const SymmetryGroup& g) {
    Json j;
    j["order"] = g.order();
    Json gens = Json::array();
    for (const auto& e : g.generators()) gens.push_back(e.str());
    j["generators"] = gens;
    Json elems = Json::array();
    for (const auto& e : g.elements()) elems.push_back(e.str());
    j["elements"] = elems;
    j["in_sl"] = g.in_sl();
    return j;
}

Json well_behaved_json(const WellBehavedCertificate& c, const std::vector<std::string>& vars) {
    Json j;
    j["well_behaved"] = c.well_behaved;
    Json blocks = Json::array();
    for (const auto& blk : c.blocks) {
        Json names = Json::array();
        for (size_t v : blk) names.push_back(vars[v]);
        blocks.push_back(names);
    }
    j["blocks"] = blocks;
    if (c.well_behaved) {
        Json factors = Json::array();
        for (const auto& f : c.block_factors) {
            Json fe = Json::array();
            for (const auto& e : f) fe.push_back(e.str());
            factors.push_back(fe);
        }
        j["block_factors"] = factors;
    }
    if (c.witness) {
        j["witness_element"] = c.witness->first.str();
        j["witness_block"] = c.witness->second;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json milnor_json(const MilnorRing& ring) {
    Json j;
    j["polynomial"] = ring.polynomial().str();
    j["weights"] = rational_list_json(ring.weights());
    j["mu"] = ring.mu();
    j["central_charge"] = to_string(ring.c_hat());
    Json basis = Json::array();
    for (size_t i = 0; i < ring.mu(); ++i) basis.push_back(ring.basis_string(i));
    j["basis"] = basis;
    Json degs = Json::array();
    for (size_t i = 0; i < ring.mu(); ++i) degs.push_back(to_string(ring.degree(ring.basis()[i])));
    j["degrees"] = degs;
    j["hessian_nf"] = scalar_json(ring.hessian_coeff());
    j["hessian_monomial"] = ring.hessian_monomial().str(ring.vars());
    Json pairing = Json::array();
    for (size_t i = 0; i < ring.mu(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < ring.mu(); ++k) row.push_back(scalar_json(ring.pairing(i, k)));
        pairing.push_back(row);
    }
    j["pairing"] = pairing;
    return j;
}

Json frobenius_check_json(const FrobeniusCheckReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    Json f = Json::array();
    for (const auto& w : rep.failures) f.push_back(w);
    j["failures"] = f;
    return j;
}

Json bmodel_json(const BModel& model) {
    Json j;
    j["polynomial"] = model.polynomial().str();
    j["group_order"] = model.group().order();
    j["dim"] = model.dim();
    Json sectors = Json::array();
    for (const auto& s : model.sectors()) {
        Json js;
        js["element"] = s.g.str();
        js["restriction"] = s.restricted.str();
        js["mu"] = s.ring->mu();
        Json inv = Json::array();
        for (const auto& m : s.invariant) inv.push_back(m.str(model.polynomial().vars()));
        js["invariant_basis"] = inv;
        sectors.push_back(js);
    }
    j["sectors"] = sectors;
    Json basis = Json::array();
    Json degrees = Json::array();
    for (size_t i = 0; i < model.dim(); ++i) {
        basis.push_back(model.label(i));
        degrees.push_back(to_string(model.degree(i)));
    }
    j["basis"] = basis;
    j["degrees"] = degrees;
    Json star = Json::array();
    for (size_t i = 0; i < model.dim(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < model.dim(); ++k) {
            const ProductEvaluation& ev = model.star(i, k);
            Json cell = Json::array();
            if (!ev.result.empty())
                for (size_t t = 0; t < model.dim(); ++t)
                    if (!ev.result[t].is_zero()) {
                        Json entry;
                        entry["basis"] = model.label(t);
                        entry["coeff"] = scalar_json(ev.result[t]);
                        cell.push_back(entry);
                    }
            row.push_back(cell);
        }
        star.push_back(row);
    }
    j["star_table"] = star;
    Json pairing = Json::array();
    for (size_t i = 0; i < model.dim(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < model.dim(); ++k) row.push_back(scalar_json(model.pairing(i, k)));
        pairing.push_back(row);
    }
    j["pairing"] = pairing;
    return j;
}

Json bmodel_axioms_json(const BModelAxiomReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["invertible_w"] = rep.invertible;
    j["failure_severity"] = rep.invertible ? "bug (associativity is a theorem for invertible W)"
                                           : "finding (associativity unproven for noninvertible W)";
    Json f = Json::array();
    for (const auto& w : rep.failures) f.push_back(w);
    j["failures"] = f;
    return j;
}

Json certificate_json(const IsoCertificate& cert) {
    Json j;
    j["pass"] = cert.pass();
    j["dims_equal"] = cert.dims_equal;
    j["bijective"] = cert.bijective;
    j["unit"] = cert.unit_ok;
    j["graded"] = cert.graded;
    j["products"] = cert.products_ok;
    j["pairings"] = cert.pairings_ok;
    switch (cert.hessian_transport) {
        case IsoCertificate::Transport::Pass: j["hessian_transport"] = "pass"; break;
        case IsoCertificate::Transport::Fail: j["hessian_transport"] = "fail"; break;
        case IsoCertificate::Transport::NotApplicable: j["hessian_transport"] = "not-applicable"; break;
    }
    j["equivariant"] = cert.equivariant;
    Json w = Json::array();
    for (const auto& s : cert.witnesses) w.push_back(s);
    j["witnesses"] = w;
    return j;
}

Json map_json(const FrobeniusMap& f) {
    Json j;
    j["source"] = f.source.name;
    j["target"] = f.target.name;
    j["diagonal"] = f.is_diagonal();
    Json images = Json::array();
    for (size_t i = 0; i < f.source.dim; ++i) {
        Json entry;
        entry["from"] = f.source.labels[i];
        Json to = Json::array();
        for (size_t k = 0; k < f.target.dim; ++k)
            if (!f.images[i][k].is_zero()) {
                Json t;
                t["basis"] = f.target.labels[k];
                t["coeff"] = scalar_json(f.images[i][k]);
                to.push_back(t);
            }
        entry["to"] = to;
        images.push_back(entry);
    }
    j["images"] = images;
    return j;
}

Json scaling_solve_json(const ScalingSolveResult& r, const std::vector<std::string>& vars) {
    Json j;
    j["found"] = r.found;
    Json solved = Json::array();
    for (const auto& s : r.solved) {
        Json e;
        e["variable"] = vars[s.var];
        e["constraint"] = "c^" + std::to_string(s.exponent) + " = " + to_string(s.value);
        e["root"] = scalar_json(s.c);
        solved.push_back(e);
    }
    j["constants"] = solved;
    if (r.field) j["extension_modulus"] = r.field->modulus_string();
    if (!r.modulus_note.empty()) j["modulus_note"] = r.modulus_note;
    auto cons = [](const std::vector<ScalingConstraint>& cs) {
        Json a = Json::array();
        for (const auto& c : cs) {
            Json e;
            Json u = Json::array();
            for (long x : c.u) u.push_back(x);
            e["exponents"] = u;
            e["value"] = to_string(c.q);
            e["origin"] = c.origin;
            a.push_back(e);
        }
        return a;
    };
    j["pairing_constraints"] = cons(r.pairing_constraints);
    j["product_constraints"] = cons(r.product_constraints);
    if (!r.found) j["infeasibility"] = r.infeasibility;
    return j;
}

Json equivalence_json(const EquivalenceResult& r) {
    Json j;
    j["equivalent"] = r.equivalent;
    if (r.witness) {
        j["witness"] = r.witness->str();
        if (r.field) j["extension_modulus"] = r.field->modulus_string();
    }
    j["refuted_by_unit_ideal"] = r.refuted_by_unit_ideal;
    j["detail"] = r.detail;
    return j;
}

Json report_envelope(const std::string& command, Json result, double elapsed_ms,
                     bool with_timing) {
    Json j;
    j["schema"] = 1;
    j["tool"] = "lgb";
    j["version"] = "0.1.0";
    j["command"] = command;
    j["result"] = std::move(result);
    if (with_timing) j["timing_ms"] = elapsed_ms;
    return j;
}

namespace {

void render(const Json& j, std::ostringstream& os, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                os << pad << k << ":\n";
                render(v, os, indent + 1);
            } else if (v.is_array()) {
                os << pad << k << ": ";
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i) os << ", ";
                    os << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
                }
                os << "\n";
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                render(v, os, indent + 1);
                os << "\n";
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, os, 0);
    return os.str();
}

}  // namespace lgb
