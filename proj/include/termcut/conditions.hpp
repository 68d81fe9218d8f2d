#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "termcut/typevec.hpp"

namespace termcut {

// Every failing check carries a witness that re-evaluates to a genuine
// violation of the claimed inequality.

struct SymmetryResult {
    bool pass = true;
    Mask witness = 0;  // the set whose value differs from its complement
    Rat value_set, value_complement;
};

struct SubmodularityResult {
    bool pass = true;
    Mask s = 0, s_prime = 0;
    Rat lhs, rhs;  // pi_S + pi_S' vs pi_{S&S'} + pi_{S|S'}
};

enum class PairStatus { Holds, NotLaminar, NotDominant, Violated };

struct PairInequalityResult {
    PairStatus status = PairStatus::Holds;
    std::pair<int, int> dominance_witness{-1, -1};
    Rat lhs, rhs;  // <beta, pi> vs <gamma, pi>, set when premises hold
};

// Plumbing check, immediate from the cut definition (the same cut
// separates S and its complement); not one of the paper's conditions.
SymmetryResult check_complement_symmetry(const TypeVector& pi);

SubmodularityResult check_submodularity(const TypeVector& pi);

// Premise failures (support not laminar, metrics not dominating) are
// reported distinctly; the inequality is judged only when both hold.
PairInequalityResult check_pair_inequality(const TypeVector& pi, const TypeVector& beta,
                                           const TypeVector& gamma);

// All maximal laminar families of proper nonempty subsets, generated by
// recursive binary partitioning; (2k-3)!! families for k terminals.
std::vector<LaminarFamily> enumerate_maximal_laminar(const std::vector<std::string>& terminals);

struct LaminarGap {
    Rat gap;  // negative certifies a violated laminar inequality
    TypeVector beta;
    TypeVector gamma;
    LaminarGap(std::vector<std::string> terminals)
        : beta(terminals), gamma(std::move(terminals)) {}
};

// Exact separation LP: beta ranges over all proper nonempty subsets, gamma
// over the family with sum gamma = 1, subject to D_beta >= D_gamma pairwise;
// minimizes <beta, pi> - <gamma, pi>.
LaminarGap most_violated_laminar(const TypeVector& pi, const LaminarFamily& fam);

struct FullReport {
    SymmetryResult symmetry;
    SubmodularityResult submodularity;
    bool sweep_ran = false;  // LP sweep needs k <= 7
    int families_checked = 0;
    std::optional<LaminarGap> violation;  // most negative gap found, if any
    bool clean() const {
        return symmetry.pass && submodularity.pass && !violation.has_value();
    }
    std::string verdict() const;
};

// Aggregates all checks; for k <= 7 also sweeps every maximal laminar
// family with the separation LP.
FullReport full_report(const TypeVector& pi);

}  // namespace termcut
