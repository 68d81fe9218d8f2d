#include "termcut/io_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "termcut/error.hpp"

namespace termcut {

namespace {

std::vector<std::string> terminals_from_json(const Json& j) {
    if (!j.contains("terminals") || !j["terminals"].is_array())
        throw InvalidInput("missing terminals array");
    std::vector<std::string> terminals;
    for (const auto& t : j["terminals"]) {
        if (!t.is_string()) throw InvalidInput("terminal identifiers must be strings");
        terminals.push_back(t.get<std::string>());
    }
    return terminals;
}

Rat rational_from_json(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
    throw InvalidInput("values must be rational strings or integers");
}

Json intervals_to_json(const IntervalList& list) {
    Json out = Json::array();
    for (const Interval& i : list) out.push_back(Json::array({rat_str(i.lo), rat_str(i.hi)}));
    return out;
}

}  // namespace

std::vector<std::string> mask_to_ids(const std::vector<std::string>& terminals, Mask s) {
    std::vector<std::string> out;
    for (int i : mask_indices(s)) out.push_back(terminals[i]);
    return out;
}

Mask mask_from_ids(const std::vector<std::string>& terminals, const Json& ids) {
    if (!ids.is_array()) throw InvalidInput("set must be an array of terminal identifiers");
    Mask s = 0;
    for (const auto& id : ids) {
        if (!id.is_string()) throw InvalidInput("set elements must be strings");
        std::string name = id.get<std::string>();
        auto it = std::find(terminals.begin(), terminals.end(), name);
        if (it == terminals.end()) throw InvalidInput("unknown terminal: " + name);
        Mask bit = Mask{1} << (it - terminals.begin());
        if (s & bit) throw InvalidInput("duplicate terminal in set: " + name);
        s |= bit;
    }
    return s;
}

Json tv_to_json(const TypeVector& v) {
    Json j;
    j["terminals"] = v.terminals();
    Json entries = Json::array();
    for (const auto& [mask, value] : v.entries()) {
        Json entry;
        entry["set"] = mask_to_ids(v.terminals(), mask);
        entry["value"] = rat_str(value);
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

TypeVector tv_from_json(const Json& j, bool require_complete) {
    TypeVector v(terminals_from_json(j));
    if (!j.contains("entries") || !j["entries"].is_array())
        throw InvalidInput("missing entries array");
    std::set<Mask> supplied;
    for (const auto& entry : j["entries"]) {
        if (!entry.contains("set") || !entry.contains("value"))
            throw InvalidInput("entry needs set and value");
        Mask s = mask_from_ids(v.terminals(), entry["set"]);
        if (s == 0 || s >= full_mask(v.terminal_count()))
            throw InvalidInput("entry set must be a proper nonempty terminal subset");
        if (!supplied.insert(s).second) throw InvalidInput("duplicate set in entries");
        Rat value = rational_from_json(entry["value"]);
        if (value < 0) throw InvalidInput("type vector values must be nonnegative");
        v.set(s, value);
    }
    if (require_complete) {
        std::size_t needed = (std::size_t{1} << v.terminal_count()) - 2;
        if (supplied.size() != needed)
            throw InvalidInput("incomplete vector: " + std::to_string(supplied.size()) +
                               " of " + std::to_string(needed) + " coordinates supplied");
    }
    return v;
}

Json metric_to_json(const TerminalMetric& d) {
    Json j;
    j["terminals"] = d.terminals();
    Json entries = Json::array();
    int k = d.terminal_count();
    for (int i = 0; i < k; ++i) {
        for (int l = i + 1; l < k; ++l) {
            Json entry;
            entry["pair"] = Json::array({d.terminals()[i], d.terminals()[l]});
            entry["value"] = rat_str(d.at(i, l));
            entries.push_back(std::move(entry));
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

TerminalMetric metric_from_json(const Json& j) {
    std::vector<std::string> terminals = terminals_from_json(j);
    int k = static_cast<int>(terminals.size());
    if (!j.contains("entries") || !j["entries"].is_array())
        throw InvalidInput("missing entries array");
    std::map<std::pair<int, int>, Rat> table;
    for (const auto& entry : j["entries"]) {
        if (!entry.contains("pair") || !entry.contains("value"))
            throw InvalidInput("metric entry needs pair and value");
        Mask s = mask_from_ids(terminals, entry["pair"]);
        std::vector<int> idx = mask_indices(s);
        if (idx.size() != 2) throw InvalidInput("metric pair must name two distinct terminals");
        auto key = std::make_pair(idx[0], idx[1]);
        if (table.count(key)) throw InvalidInput("duplicate pair in metric");
        table[key] = rational_from_json(entry["value"]);
    }
    std::vector<Rat> upper;
    for (int i = 0; i < k; ++i) {
        for (int l = i + 1; l < k; ++l) {
            auto it = table.find({i, l});
            if (it == table.end())
                throw InvalidInput("metric missing pair " + terminals[i] + "," + terminals[l]);
            upper.push_back(it->second);
        }
    }
    return TerminalMetric::validated(std::move(terminals), std::move(upper));
}

Json certificate_to_json(const Graph& g, const TypeVector& beta, const TypeVector& gamma,
                         const Theorem1Result& result) {
    Json j;
    j["terminals"] = g.terminal_ids();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        Json edge;
        edge["u"] = g.vertex_id(e.u);
        edge["v"] = g.vertex_id(e.v);
        edge["capacity"] = rat_str(e.capacity);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    j["beta"] = tv_to_json(beta);
    j["gamma"] = tv_to_json(gamma);

    Json checks;
    checks["laminar"] = result.laminar_ok;
    checks["dominance"] = result.dominance_ok;
    if (!result.dominance_ok && result.dominance_witness.first >= 0) {
        checks["dominance_witness"] =
            Json::array({g.terminal_ids()[result.dominance_witness.first],
                         g.terminal_ids()[result.dominance_witness.second]});
    }
    if (result.evaluated) {
        checks["cut_beta"] = rat_str(result.lhs);
        checks["cut_gamma"] = rat_str(result.rhs);
        checks["inequality"] = result.inequality_ok;
        checks["dist_dominates_beta"] = result.obs_dist_ok;
        checks["total_length_identity"] = result.obs_total_ok;
        checks["parts_consistent"] = result.report.parts_consistent;
        checks["case_bound"] = result.report.case_bound;
        checks["regions_disjoint"] = result.report.regions_disjoint;
        checks["p1"] = result.report.p1;
        checks["p2"] = result.report.p2;
        checks["separation"] = result.report.separation;
        checks["radii_monotone"] = result.report.radii_monotone;
        checks["failures"] = result.report.failures;
    }
    j["checks"] = std::move(checks);

    if (result.evaluated) {
        Json base = Json::array();
        for (const Rat& length : result.dec.base) base.push_back(rat_str(length));
        j["base_lengths"] = std::move(base);

        Json parts = Json::array();
        for (std::size_t p = 0; p < result.dec.parts.size(); ++p) {
            Json part;
            part["set"] = mask_to_ids(g.terminal_ids(), result.dec.parts[p].first);
            Json lengths = Json::array();
            for (const Rat& length : result.dec.parts[p].second)
                lengths.push_back(rat_str(length));
            part["lengths"] = std::move(lengths);
            Json intervals = Json::array();
            for (const IntervalList& list : result.dec.regions[p].second)
                intervals.push_back(intervals_to_json(list));
            part["intervals"] = std::move(intervals);
            parts.push_back(std::move(part));
        }
        j["parts"] = std::move(parts);

        Json trace = Json::array();
        for (const RadiiStep& step : result.dec.radii_trace) {
            Json item;
            item["set"] = mask_to_ids(g.terminal_ids(), step.set);
            Json before = Json::array(), after = Json::array();
            for (const Rat& r : step.before) before.push_back(rat_str(r));
            for (const Rat& r : step.after) after.push_back(rat_str(r));
            item["before"] = std::move(before);
            item["after"] = std::move(after);
            trace.push_back(std::move(item));
        }
        j["radii_trace"] = std::move(trace);
    }
    return j;
}

Json report_to_json(const FullReport& report, const TypeVector& pi) {
    Json j;
    Json checks = Json::array();
    {
        Json c;
        c["name"] = "complement-symmetry";
        c["note"] = "artifact plumbing, immediate from the cut definition";
        c["status"] = report.symmetry.pass ? "pass" : "fail";
        if (!report.symmetry.pass) {
            c["witness_set"] = mask_to_ids(pi.terminals(), report.symmetry.witness);
            c["value_set"] = rat_str(report.symmetry.value_set);
            c["value_complement"] = rat_str(report.symmetry.value_complement);
        }
        checks.push_back(std::move(c));
    }
    {
        Json c;
        c["name"] = "submodularity";
        c["status"] = report.submodularity.pass ? "pass" : "fail";
        if (!report.submodularity.pass) {
            c["witness_s"] = mask_to_ids(pi.terminals(), report.submodularity.s);
            c["witness_s_prime"] = mask_to_ids(pi.terminals(), report.submodularity.s_prime);
            c["lhs"] = rat_str(report.submodularity.lhs);
            c["rhs"] = rat_str(report.submodularity.rhs);
        }
        checks.push_back(std::move(c));
    }
    {
        Json c;
        c["name"] = "laminar-inequality-sweep";
        c["status"] = !report.sweep_ran ? "skipped"
                      : report.violation ? "fail"
                                         : "pass";
        c["families_checked"] = report.families_checked;
        if (report.violation) {
            c["gap"] = rat_str(report.violation->gap);
            c["beta"] = tv_to_json(report.violation->beta);
            c["gamma"] = tv_to_json(report.violation->gamma);
        }
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["verdict"] = report.verdict();
    return j;
}

std::string report_table(const FullReport& report, const TypeVector& pi) {
    std::ostringstream out;
    auto line = [&](const std::string& name, const std::string& status,
                    const std::string& detail) {
        out << "  " << name;
        for (std::size_t i = name.size(); i < 26; ++i) out << ' ';
        out << status;
        if (!detail.empty()) out << "  " << detail;
        out << '\n';
    };
    auto join = [&](Mask s) {
        std::string text = "{";
        bool first = true;
        for (const auto& id : mask_to_ids(pi.terminals(), s)) {
            if (!first) text += ",";
            text += id;
            first = false;
        }
        return text + "}";
    };
    line("complement-symmetry", report.symmetry.pass ? "pass" : "FAIL",
         report.symmetry.pass ? ""
                              : join(report.symmetry.witness) + ": " +
                                    rat_str(report.symmetry.value_set) + " vs " +
                                    rat_str(report.symmetry.value_complement));
    line("submodularity", report.submodularity.pass ? "pass" : "FAIL",
         report.submodularity.pass
             ? ""
             : join(report.submodularity.s) + "," + join(report.submodularity.s_prime) + ": " +
                   rat_str(report.submodularity.lhs) + " < " +
                   rat_str(report.submodularity.rhs));
    if (!report.sweep_ran) {
        line("laminar-inequality-sweep", "skipped", "k > 7");
    } else if (!report.violation) {
        line("laminar-inequality-sweep", "pass",
             std::to_string(report.families_checked) + " families");
    } else {
        line("laminar-inequality-sweep", "FAIL",
             "gap " + rat_str(report.violation->gap));
    }
    out << "verdict: " << report.verdict() << '\n';
    return out.str();
}

Json chain_to_json(const ChainReport& report) {
    Json j;
    j["pi_min"] = rat_str(report.karger.pi_min);
    j["count"] = report.karger.count;
    j["bound"] = report.karger.bound;
    j["count_below_bound"] = report.karger.ok;
    j["beta"] = tv_to_json(report.beta);
    j["lp_value"] = rat_str(report.lp_value);
    j["gamma"] = tv_to_json(report.gamma);
    j["cut_beta"] = rat_str(report.cut_beta);
    j["cut_gamma"] = rat_str(report.cut_gamma);
    j["i1_laminar"] = report.i1_laminar;
    j["i2_dominance"] = report.i2_dominance;
    j["objective_preserved"] = report.objective_preserved;
    j["gamma_feasible"] = report.gamma_feasible;
    j["theorem1_inequality"] = report.theorem1_inequality;
    j["beta_side_bound"] = report.beta_side_bound;
    j["gamma_side_bound"] = report.gamma_side_bound;
    j["coherence"] = report.coherence;
    j["all_ok"] = report.all_ok();
    return j;
}

Json lp_to_json(const LPProblem& problem) {
    Json j;
    j["direction"] = problem.direction == Direction::Maximize ? "max" : "min";
    j["variables"] = problem.variable_names;
    Json objective = Json::array();
    for (const Rat& c : problem.objective) objective.push_back(rat_str(c));
    j["objective"] = std::move(objective);
    Json rows = Json::array();
    for (const LinearConstraint& c : problem.constraints) {
        Json row;
        Json terms = Json::array();
        for (const auto& [var, coeff] : c.terms)
            terms.push_back(Json::array({problem.variable_names[var], rat_str(coeff)}));
        row["terms"] = std::move(terms);
        row["sense"] = c.sense == Sense::LE ? "<=" : c.sense == Sense::GE ? ">=" : "=";
        row["rhs"] = rat_str(c.rhs);
        rows.push_back(std::move(row));
    }
    j["constraints"] = std::move(rows);
    return j;
}

Json lp_solution_to_json(const LPProblem& problem, const LPSolution& solution) {
    Json j;
    j["status"] = solution.status == LPStatus::Optimal     ? "optimal"
                  : solution.status == LPStatus::Infeasible ? "infeasible"
                                                            : "unbounded";
    if (solution.status == LPStatus::Optimal) {
        j["value"] = rat_str(solution.value);
        Json assignment;
        for (std::size_t v = 0; v < solution.assignment.size(); ++v)
            if (solution.assignment[v] != 0)
                assignment[problem.variable_names[v]] = rat_str(solution.assignment[v]);
        j["assignment"] = std::move(assignment);
    }
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace termcut
