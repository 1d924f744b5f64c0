// lgb: exact Milnor rings, orbifolded Landau-Ginzburg B-models, and
// Frobenius-algebra isomorphism certificates from the command line.

#include "lgb/equivalence.hpp"
#include "lgb/isomorphism.hpp"
#include "lgb/parse.hpp"
#include "lgb/report.hpp"
#include "lgb/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace lgb;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct ProblemFile {
    std::optional<std::string> w_text, v_text;
    std::optional<std::vector<std::string>> vars;
    std::optional<std::string> group_text;
    std::optional<std::string> map_path;
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::BadInput, "cannot open problem file '" + path + "'");
    ProblemFile pf;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t colon = t.find(':');
        if (colon == std::string::npos)
            fail(ErrorCode::BadInput, path + ":" + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (key == "W")
            pf.w_text = value;
        else if (key == "V")
            pf.v_text = value;
        else if (key == "vars") {
            std::vector<std::string> vs;
            std::istringstream iss(value);
            std::string item;
            while (std::getline(iss, item, ',')) vs.push_back(trim(item));
            pf.vars = vs;
        } else if (key == "group")
            pf.group_text = value;
        else if (key == "map")
            pf.map_path = value;
        else
            fail(ErrorCode::BadInput,
                 path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return pf;
}

struct Options {
    bool json = false;
    bool no_timing = false;
    std::string group_override;
    std::string map_path;
    bool solve = false;
};

Polynomial require_w(const ProblemFile& pf) {
    if (!pf.w_text) fail(ErrorCode::BadInput, "problem file needs a 'W:' line");
    return parse_polynomial(*pf.w_text, pf.vars);
}

SymmetryGroup group_for(const Polynomial& w, const ProblemFile& pf, const Options& opt) {
    std::string text = !opt.group_override.empty()
                           ? opt.group_override
                           : pf.group_text.value_or("");
    if (text.empty()) return trivial_group(w);
    return subgroup_generated(w, parse_group_generators(text));
}

// map file: optional "field: sym | modulus" header, then lines
// "monomial -> scalar * monomial"
FrobeniusMap load_map(const std::string& path, const RingPtr& src, const RingPtr& tgt) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::BadInput, "cannot open map file '" + path + "'");

    FieldPtr field;
    FrobeniusMap f;
    f.source_ring = src;
    f.target_ring = tgt;
    f.source = view_of(src, "Q[" + src->polynomial().str() + "]");
    f.target = view_of(tgt, "Q[" + tgt->polynomial().str() + "]");
    f.images.assign(src->mu(), std::vector<Scalar>(tgt->mu(), Scalar()));
    std::vector<bool> covered(src->mu(), false);

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto here = [&] { return path + ":" + std::to_string(lineno); };
        if (t.rfind("field:", 0) == 0) {
            std::string spec = trim(t.substr(6));
            size_t bar = spec.find('|');
            if (bar == std::string::npos)
                fail(ErrorCode::BadInput, here() + ": expected 'field: sym | modulus'");
            std::string sym = trim(spec.substr(0, bar));
            Polynomial mod = parse_polynomial(trim(spec.substr(bar + 1)), {{sym}});
            std::vector<Rational> coeffs;
            for (const auto& [m, c] : mod.terms()) {
                size_t deg = static_cast<size_t>(m[0]);
                if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
                coeffs[deg] = c.rational_value();
            }
            field = NumberField::make(sym, coeffs);
            continue;
        }
        size_t arrow = t.find("->");
        if (arrow == std::string::npos) fail(ErrorCode::BadInput, here() + ": expected '->'");
        Polynomial lhs = parse_polynomial(trim(t.substr(0, arrow)), src->vars());
        Polynomial rhs = parse_polynomial(trim(t.substr(arrow + 2)), tgt->vars(), field);
        if (lhs.term_count() != 1 || !lhs.terms().begin()->second.is_one())
            fail(ErrorCode::BadInput, here() + ": left side must be a single bare monomial");
        auto sidx = src->find_basis_index(lhs.terms().begin()->first);
        if (!sidx) fail(ErrorCode::BadInput, here() + ": monomial not in the source basis");
        if (covered[*sidx]) fail(ErrorCode::BadInput, here() + ": duplicate image");
        covered[*sidx] = true;
        for (const auto& [m, c] : rhs.terms()) {
            auto tidx = tgt->find_basis_index(m);
            if (!tidx)
                fail(ErrorCode::BadInput,
                     here() + ": " + monomial_string(m, tgt->vars()) + " not in the target basis");
            f.images[*sidx][*tidx] = c;
        }
    }
    for (size_t i = 0; i < src->mu(); ++i)
        if (!covered[i])
            fail(ErrorCode::BadInput,
                 "map file gives no image for basis element " + src->basis_string(i));
    return f;
}

struct Emitter {
    Options opt;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int emit(const std::string& command, Json result, int exit_code) const {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        Json rep = report_envelope(command, std::move(result), ms, !opt.no_timing);
        if (opt.json)
            std::cout << rep.dump(2) << "\n";
        else
            std::cout << render_text(rep);
        return exit_code;
    }
};

int cmd_analyze(const ProblemFile& pf, const Options& opt) {
    Emitter em{opt};
    Polynomial w = require_w(pf);
    Json res;
    res["polynomial"] = polynomial_json(w);

    AdmissibilityResult adm = is_admissible(w);
    res["admissible"] = adm.admissible;
    if (!adm) {
        res["reason"] = adm.reason;
        return em.emit("analyze", std::move(res), kExitOk);
    }
    res["weights"] = weights_json(compute_weights(w));
    res["classification"] = decomposition_json(classify(w), w);
    SymmetryGroup gmax = max_symmetry_group(w);
    res["g_max"] = group_json(gmax);
    res["sl"] = group_json(sl_subgroup(gmax));
    WebbResult webb = webb_applicable(w);
    res["webb_applicable"] = webb.applicable;
    if (webb.witness) res["webb_witness"] = webb.witness->str(w.vars());
    return em.emit("analyze", std::move(res), kExitOk);
}

int cmd_milnor(const ProblemFile& pf, const Options& opt) {
    Emitter em{opt};
    Polynomial w = require_w(pf);
    MilnorRing ring(w);
    Json res;
    res["milnor_ring"] = milnor_json(ring);
    FrobeniusCheckReport rep = verify_frobenius(ring);
    res["frobenius_axioms"] = frobenius_check_json(rep);
    return em.emit("milnor", std::move(res), rep.pass ? kExitOk : kExitFinding);
}

int cmd_symmetry(const ProblemFile& pf, const Options& opt) {
    Emitter em{opt};
    Polynomial w = require_w(pf);
    Json res;
    res["polynomial"] = polynomial_json(w);
    SymmetryGroup gmax = max_symmetry_group(w);
    res["g_max"] = group_json(gmax);
    res["sl"] = group_json(sl_subgroup(gmax));
    std::string gt = !opt.group_override.empty() ? opt.group_override : pf.group_text.value_or("");
    if (!gt.empty()) {
        SymmetryGroup g = subgroup_generated(w, parse_group_generators(gt));
        res["group"] = group_json(g);
        res["well_behaved"] = well_behaved_json(is_well_behaved(w, g), w.vars());
    }
    return em.emit("symmetry", std::move(res), kExitOk);
}

int cmd_bmodel(const ProblemFile& pf, const Options& opt) {
    Emitter em{opt};
    Polynomial w = require_w(pf);
    SymmetryGroup g = group_for(w, pf, opt);
    BModel model(w, g);
    Json res;
    res["bmodel"] = bmodel_json(model);
    BModelAxiomReport rep = verify_bmodel_axioms(model);
    res["axioms"] = bmodel_axioms_json(rep);
    return em.emit("bmodel", std::move(res), rep.pass ? kExitOk : kExitFinding);
}

int cmd_equiv(const ProblemFile& pf, const Options& opt) {
    Emitter em{opt};
    Polynomial w = require_w(pf);
    if (!pf.v_text) fail(ErrorCode::BadInput, "equiv needs a 'V:' line");
    Polynomial v = parse_polynomial(*pf.v_text, pf.vars);
    Json res;
    res["W"] = polynomial_json(w);
    res["V"] = polynomial_json(v);
    bool same = check_same_weights(w, v);
    res["same_unordered_weights"] = same;
    res["webb_W"] = webb_applicable(w).applicable;
    res["webb_V"] = webb_applicable(v).applicable;
    if (!same) {
        res["equivalence"] = {{"equivalent", false},
                              {"detail", "unordered weight multisets differ"}};
        return em.emit("equiv", std::move(res), kExitOk);
    }
    EquivalenceResult r = search_linear_equivalence(w, v);
    res["equivalence"] = equivalence_json(r);
    return em.emit("equiv", std::move(res), kExitOk);
}

int cmd_extend(const ProblemFile& pf, const Options& opt) {
    Emitter em{opt};
    Polynomial w = require_w(pf);
    if (!pf.v_text) fail(ErrorCode::BadInput, "extend-iso needs a 'V:' line");
    Polynomial v = parse_polynomial(*pf.v_text, pf.vars);
    SymmetryGroup g = group_for(w, pf, opt);

    auto qw = std::make_shared<const MilnorRing>(w);
    auto qv = std::make_shared<const MilnorRing>(v);

    Json res;
    res["W"] = polynomial_json(w);
    res["V"] = polynomial_json(v);
    res["group"] = group_json(g);

    FrobeniusMap phi;
    if (opt.solve) {
        ScalingSolveResult sol = solve_scaling_iso(qw, qv);
        res["scaling"] = scaling_solve_json(sol, qw->vars());
        if (!sol.found) {
            res["verdict"] = "no diagonal scaling isomorphism exists";
            return em.emit("extend-iso", std::move(res), kExitFinding);
        }
        phi = *sol.map;
    } else {
        std::string mp = !opt.map_path.empty() ? opt.map_path : pf.map_path.value_or("");
        if (mp.empty())
            fail(ErrorCode::BadInput, "extend-iso needs --solve or a map file (--map / 'map:')");
        phi = load_map(mp, qw, qv);
    }

    IsoCertificate phi_cert = verify_frobenius_iso(phi);
    std::string witness;
    phi_cert.equivariant = is_equivariant(phi, g, &witness);
    if (!phi_cert.equivariant) phi_cert.witnesses.push_back(witness);
    res["phi"] = map_json(phi);
    res["phi_certificate"] = certificate_json(phi_cert);
    if (!phi_cert.pass()) {
        res["verdict"] = "phi is not an equivariant isomorphism; extension not attempted";
        return em.emit("extend-iso", std::move(res), kExitFinding);
    }

    ExtensionResult ext = extend_isomorphism(phi, g);
    res["well_behaved_W"] = well_behaved_json(ext.wb_source, w.vars());
    res["well_behaved_V"] = well_behaved_json(ext.wb_target, v.vars());
    res["source_model"] = bmodel_json(*ext.source_model);
    res["target_model"] = bmodel_json(*ext.target_model);
    res["psi"] = map_json(ext.psi);
    res["psi_certificate"] = certificate_json(ext.certificate);
    res["verdict"] = ext.certificate.pass()
                         ? "phi extends to a verified isomorphism of orbifolded models"
                         : "extension certificate FAILED (finding)";
    return em.emit("extend-iso", std::move(res), ext.certificate.pass() ? kExitOk : kExitFinding);
}

int cmd_selftest(const Options& opt) {
    Emitter em{opt};
    std::vector<CriterionResult> results = run_acceptance();
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (!opt.json) std::cout << format_criterion(r) << "\n";
        Json e;
        e["criterion"] = r.number;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        if (!opt.no_timing) e["ms"] = r.ms;
        arr.push_back(e);
    }
    if (opt.json) {
        Json res;
        res["criteria"] = arr;
        res["pass"] = all;
        return em.emit("selftest", std::move(res), all ? kExitOk : kExitFinding);
    }
    std::cout << (all ? "selftest: all criteria passed\n" : "selftest: FAILURES present\n");
    return all ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Landau-Ginzburg B-model toolkit"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON report");
    app.add_flag("--no-timing", opt.no_timing, "omit timing for byte-reproducible output");
    app.add_option("--group", opt.group_override, "group generators, e.g. \"1/2,1/2;0,1/3\"");
    app.add_option("--map", opt.map_path, "diagonal map file for extend-iso");
    bool solve = false;
    app.add_flag("--solve", solve, "solve for a diagonal scaling isomorphism");

    std::string file;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("problem", file, "problem file (W:, V:, vars:, group:, map:)")
            ->required();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "weights, admissibility, classification, symmetry groups");
    add_file(analyze);
    CLI::App* milnor = app.add_subcommand("milnor", "Milnor ring report with Frobenius verification");
    add_file(milnor);
    CLI::App* symmetry = app.add_subcommand("symmetry", "maximal/SL symmetry groups and well-behavedness");
    add_file(symmetry);
    CLI::App* bmodel = app.add_subcommand("bmodel", "orbifolded B-model with axiom verification");
    add_file(bmodel);
    CLI::App* equiv = app.add_subcommand("equiv", "singularity equivalence search between W and V");
    add_file(equiv);
    CLI::App* extend = app.add_subcommand("extend-iso", "verify/solve phi and extend to orbifolded models");
    add_file(extend);
    app.add_subcommand("selftest", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);
    opt.solve = solve;

    try {
        if (analyze->parsed()) return cmd_analyze(load_problem(file), opt);
        if (milnor->parsed()) return cmd_milnor(load_problem(file), opt);
        if (symmetry->parsed()) return cmd_symmetry(load_problem(file), opt);
        if (bmodel->parsed()) return cmd_bmodel(load_problem(file), opt);
        if (equiv->parsed()) return cmd_equiv(load_problem(file), opt);
        if (extend->parsed()) return cmd_extend(load_problem(file), opt);
        return cmd_selftest(opt);
    } catch (const lgb::Error& e) {
        lgb::Json err;
        err["error"] = {{"code", lgb::error_code_name(e.code())}, {"message", e.what()}};
        if (opt.json)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return e.code() == lgb::ErrorCode::Internal ? kExitInternal : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
