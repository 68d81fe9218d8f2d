#include "termcut/conditions.hpp"

#include <algorithm>

#include "termcut/error.hpp"
#include "termcut/lp.hpp"

namespace termcut {

namespace {

void check_limit(int k, int limit, const char* who) {
    if (k > limit)
        throw ResourceLimit(std::string(who) + ": " + std::to_string(k) +
                            " terminals exceeds limit " + std::to_string(limit));
}

std::vector<Rat> dense_values(const TypeVector& pi) {
    std::vector<Rat> val(std::size_t{1} << pi.terminal_count(), Rat(0));
    for (const auto& [mask, value] : pi.entries()) val[mask] = value;
    return val;
}

}  // namespace

SymmetryResult check_complement_symmetry(const TypeVector& pi) {
    int k = pi.terminal_count();
    check_limit(k, kEnumerationLimit, "check_complement_symmetry");
    std::vector<Rat> val = dense_values(pi);
    Mask full = full_mask(k);
    SymmetryResult result;
    for (Mask s = 1; s < full; ++s) {
        if (!contains(s, 0)) continue;
        if (val[s] != val[full ^ s]) {
            result.pass = false;
            result.witness = s;
            result.value_set = val[s];
            result.value_complement = val[full ^ s];
            return result;
        }
    }
    return result;
}

SubmodularityResult check_submodularity(const TypeVector& pi) {
    int k = pi.terminal_count();
    check_limit(k, kEnumerationLimit, "check_submodularity");
    std::vector<Rat> val = dense_values(pi);
    Mask full = full_mask(k);
    SubmodularityResult result;
    for (Mask s = 1; s < full; ++s) {
        for (Mask s2 = s + 1; s2 < full; ++s2) {
            Mask inter = s & s2, uni = s | s2;
            if (inter == 0 || uni == full) continue;
            if (inter == s || inter == s2) continue;  // nested pairs hold with equality
            Rat lhs = val[s] + val[s2];
            Rat rhs = val[inter] + val[uni];
            if (lhs < rhs) {
                result.pass = false;
                result.s = s;
                result.s_prime = s2;
                result.lhs = lhs;
                result.rhs = rhs;
                return result;
            }
        }
    }
    return result;
}

PairInequalityResult check_pair_inequality(const TypeVector& pi, const TypeVector& beta,
                                           const TypeVector& gamma) {
    if (pi.terminals() != beta.terminals() || pi.terminals() != gamma.terminals())
        throw InvalidInput("check_pair_inequality: terminal sets differ");
    PairInequalityResult result;
    if (!is_laminar(gamma.support())) {
        result.status = PairStatus::NotLaminar;
        return result;
    }
    if (!dominates(induced_metric(beta), induced_metric(gamma), &result.dominance_witness)) {
        result.status = PairStatus::NotDominant;
        return result;
    }
    result.lhs = weighted_cut(pi, beta);
    result.rhs = weighted_cut(pi, gamma);
    result.status = result.lhs >= result.rhs ? PairStatus::Holds : PairStatus::Violated;
    return result;
}

namespace {

// All recursive bipartition families of `block`, each including `block`.
void block_families(Mask block, std::vector<std::vector<Mask>>& out) {
    out.clear();
    if (popcount(block) == 1) {
        out.push_back({block});
        return;
    }
    Mask low = block & (~block + 1);
    // Submasks of block containing the lowest element, excluding block itself:
    // each unordered bipartition is generated exactly once.
    std::vector<std::vector<Mask>> left, right;
    for (Mask rest = (block ^ low); ; rest = (rest - 1) & (block ^ low)) {
        Mask a = low | rest;
        if (a != block) {
            Mask b = block ^ a;
            block_families(a, left);
            block_families(b, right);
            for (const auto& fa : left)
                for (const auto& fb : right) {
                    std::vector<Mask> family = fa;
                    family.insert(family.end(), fb.begin(), fb.end());
                    family.push_back(block);
                    out.push_back(std::move(family));
                }
        }
        if (rest == 0) break;
    }
}

}  // namespace

std::vector<LaminarFamily> enumerate_maximal_laminar(const std::vector<std::string>& terminals) {
    int k = static_cast<int>(terminals.size());
    check_limit(k, 7, "enumerate_maximal_laminar");
    if (k < 2) throw InvalidInput("enumerate_maximal_laminar: need at least 2 terminals");
    std::vector<std::vector<Mask>> raw;
    block_families(full_mask(k), raw);
    std::vector<LaminarFamily> out;
    out.reserve(raw.size());
    for (auto& family : raw) {
        family.pop_back();  // the ground set itself is not a proper subset
        std::sort(family.begin(), family.end(), canonical_less);
        out.push_back(LaminarFamily{terminals, std::move(family)});
    }
    return out;
}

LaminarGap most_violated_laminar(const TypeVector& pi, const LaminarFamily& fam) {
    if (pi.terminals() != fam.terminals)
        throw InvalidInput("most_violated_laminar: terminal sets differ");
    int k = pi.terminal_count();
    check_limit(k, 7, "most_violated_laminar");
    for (Mask s : fam.sets)
        if (s == 0 || s >= full_mask(k))
            throw InvalidInput("most_violated_laminar: family has an improper set");

    std::vector<Mask> subsets = proper_subsets_canonical(k);
    LPProblem lp;
    lp.direction = Direction::Minimize;
    for (Mask s : subsets) {
        int var = lp.add_variable("b" + std::to_string(s));
        lp.add_objective(var, pi.value(s));
    }
    int gamma_base = lp.variable_count();
    for (Mask s : fam.sets) {
        int var = lp.add_variable("c" + std::to_string(s));
        lp.add_objective(var, -pi.value(s));
    }

    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            LinearConstraint row;
            row.sense = Sense::GE;
            row.rhs = 0;
            for (std::size_t v = 0; v < subsets.size(); ++v)
                if (cuts_pair(subsets[v], i, j))
                    row.terms.emplace_back(static_cast<int>(v), Rat(1));
            for (std::size_t v = 0; v < fam.sets.size(); ++v)
                if (cuts_pair(fam.sets[v], i, j))
                    row.terms.emplace_back(gamma_base + static_cast<int>(v), Rat(-1));
            lp.constraints.push_back(std::move(row));
        }
    }
    LinearConstraint normalization;
    normalization.sense = Sense::EQ;
    normalization.rhs = 1;
    for (std::size_t v = 0; v < fam.sets.size(); ++v)
        normalization.terms.emplace_back(gamma_base + static_cast<int>(v), Rat(1));
    lp.constraints.push_back(std::move(normalization));

    LPSolution solution = solve_lp(lp);
    if (solution.status != LPStatus::Optimal)
        throw std::logic_error("most_violated_laminar: separation LP should solve");

    LaminarGap result(pi.terminals());
    result.gap = solution.value;
    for (std::size_t v = 0; v < subsets.size(); ++v)
        result.beta.set(subsets[v], solution.assignment[v]);
    for (std::size_t v = 0; v < fam.sets.size(); ++v)
        result.gamma.set(fam.sets[v], solution.assignment[gamma_base + v]);
    return result;
}

FullReport full_report(const TypeVector& pi) {
    int k = pi.terminal_count();
    check_limit(k, kEnumerationLimit, "full_report");
    FullReport report;
    report.symmetry = check_complement_symmetry(pi);
    report.submodularity = check_submodularity(pi);
    if (k <= 7) {
        report.sweep_ran = true;
        for (const LaminarFamily& fam : enumerate_maximal_laminar(pi.terminals())) {
            LaminarGap gap = most_violated_laminar(pi, fam);
            ++report.families_checked;
            if (gap.gap < 0 && (!report.violation || gap.gap < report.violation->gap))
                report.violation = gap;
        }
    }
    return report;
}

std::string FullReport::verdict() const {
    if (clean())
        return sweep_ran ? "no known necessary condition violated"
                         : "no known necessary condition violated (laminar sweep skipped, k > 7)";
    if (!symmetry.pass) return "complement symmetry violated";
    if (!submodularity.pass) return "submodularity violated";
    return "laminar inequality violated";
}

}  // namespace termcut
