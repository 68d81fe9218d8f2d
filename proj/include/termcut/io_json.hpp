#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "termcut/certificate.hpp"
#include "termcut/conditions.hpp"
#include "termcut/graph.hpp"
#include "termcut/lp.hpp"
#include "termcut/lp_cuts.hpp"
#include "termcut/typevec.hpp"

namespace termcut {

// Insertion-ordered so emitted documents are byte-stable for golden diffs.
using Json = nlohmann::ordered_json;

// {"terminals": [...], "entries": [{"set": [...], "value": "p/q"}, ...]}
// Values may be rational strings or JSON integers; duplicate sets are
// rejected. With require_complete, every proper nonempty subset must be
// listed (zero values allowed; they are dropped after the check).
Json tv_to_json(const TypeVector& v);
TypeVector tv_from_json(const Json& j, bool require_complete = false);

// {"terminals": [...], "entries": [{"pair": ["a","b"], "value": "p/q"}, ...]}
// All pairs required once; validated as a (pseudo)metric.
Json metric_to_json(const TerminalMetric& d);
TerminalMetric metric_from_json(const Json& j);

std::vector<std::string> mask_to_ids(const std::vector<std::string>& terminals, Mask s);
Mask mask_from_ids(const std::vector<std::string>& terminals, const Json& ids);

Json certificate_to_json(const Graph& g, const TypeVector& beta, const TypeVector& gamma,
                         const Theorem1Result& result);

Json report_to_json(const FullReport& report, const TypeVector& pi);
std::string report_table(const FullReport& report, const TypeVector& pi);

Json chain_to_json(const ChainReport& report);

// Debug-only serialization of LP problems and solutions.
Json lp_to_json(const LPProblem& problem);
Json lp_solution_to_json(const LPProblem& problem, const LPSolution& solution);

Json load_json(const std::string& path);
std::string dump_json(const Json& j);

}  // namespace termcut
