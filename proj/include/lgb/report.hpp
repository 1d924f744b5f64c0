#ifndef LGB_REPORT_HPP
#define LGB_REPORT_HPP

#include "lgb/equivalence.hpp"
#include "lgb/isomorphism.hpp"

#include <json.hpp>

#include <string>

namespace lgb {

// insertion-ordered so reports are byte-reproducible
using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Json rational_list_json(const std::vector<Rational>& v);
Json polynomial_json(const Polynomial& p);
Json weights_json(const WeightVector& w);
Json decomposition_json(const AtomicDecomposition& d, const Polynomial& w);
Json group_json(const SymmetryGroup& g);
Json well_behaved_json(const WellBehavedCertificate& c, const std::vector<std::string>& vars);
Json milnor_json(const MilnorRing& ring);
Json frobenius_check_json(const FrobeniusCheckReport& rep);
Json bmodel_json(const BModel& model);
Json bmodel_axioms_json(const BModelAxiomReport& rep);
Json certificate_json(const IsoCertificate& cert);
Json map_json(const FrobeniusMap& f);
Json scaling_solve_json(const ScalingSolveResult& r, const std::vector<std::string>& vars);
Json equivalence_json(const EquivalenceResult& r);

// Envelope with schema version and optional timing.
Json report_envelope(const std::string& command, Json result, double elapsed_ms, bool with_timing);

// Plain-text rendering of a report (indented key/value walk).
std::string render_text(const Json& j);

}  // namespace lgb

#endif
