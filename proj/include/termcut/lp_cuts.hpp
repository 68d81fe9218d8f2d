#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "termcut/graph.hpp"
#include "termcut/lp.hpp"
#include "termcut/typevec.hpp"

namespace termcut {

// maximize sum gamma_S subject to, per terminal pair, the cutting weight
// staying below the metric. One variable per proper nonempty subset, in
// canonical order.
LPProblem build_primal(const TerminalMetric& d, int enumeration_limit = kEnumerationLimit);

// minimize sum x_{t,t'} * d(t,t') subject to every proper nonempty subset
// being crossed with total weight at least 1. Pair variables in canonical
// (i,j) order, one constraint per subset in canonical order.
LPProblem build_dual(const TerminalMetric& d, int enumeration_limit = kEnumerationLimit);

// Reads the primal solution back into a type vector over d's terminals.
TypeVector primal_solution_to_typevector(const TerminalMetric& d, const LPSolution& solution);

// sum gamma_S * |S|, the quantity uncrossing strictly decreases.
Rat uncross_potential(const TypeVector& gamma);

// One rewrite of Claim-style uncrossing: moves min(gamma_S, gamma_S') = gamma_S
// from the crossing pair onto the two differences. Requires gamma_S <= gamma_S'
// and a genuinely crossing pair.
TypeVector uncross_step(const TypeVector& gamma, Mask s, Mask s_prime);

struct UncrossEvent {
    Mask s, s_prime;
    Rat potential_before, potential_after;
};

// Repeats uncross_step on the first crossing pair in canonical scan order
// until the support is laminar. Objective-preserving and feasibility-
// preserving; terminates because the potential strictly decreases on the
// lattice (1/D) * integers for the input's common denominator D.
TypeVector uncross_to_laminar(const TypeVector& gamma,
                              std::vector<UncrossEvent>* trace = nullptr);

struct SpanningTree {
    std::vector<std::string> terminals;
    std::vector<std::pair<int, int>> edges;  // k-1 pairs, i < j
    Rat cost;
};

// Exact MST of the complete graph on T under d; ties broken by canonical
// pair order.
SpanningTree mst(const TerminalMetric& d);

int tree_cut_edges(const SpanningTree& tau, Mask s);

// The two complementary subsets whose tree cut is exactly the given
// nonempty edge subset; first component contains terminal 0.
std::pair<Mask, Mask> sets_cutting_exactly(const SpanningTree& tau,
                                           const std::vector<int>& edge_subset);

std::int64_t binomial(int n, int r);

struct KargerResult {
    Rat pi_min;          // minimum terminal cut value
    Mask pi_witness;
    std::int64_t count;  // subsets with cut <= alpha * pi_min (S and T\S both)
    std::int64_t bound;  // 5 * C(k, 2*alpha)
    bool ok;             // count < bound
};

KargerResult verify_karger_bound(const Graph& g, int alpha);

struct ChainReport {
    KargerResult karger;
    TypeVector beta;         // indicator of the approximate cuts
    TypeVector gamma_lp;     // optimal primal solution
    TypeVector gamma;        // after uncrossing
    Rat lp_value;
    Rat cut_beta, cut_gamma;
    bool i1_laminar = false;
    bool i2_dominance = false;
    bool objective_preserved = false;  // uncrossing kept sum gamma
    bool gamma_feasible = false;       // gamma still satisfies the primal rows
    bool theorem1_inequality = false;  // cut_beta >= cut_gamma
    bool beta_side_bound = false;      // cut_beta <= alpha * pi_min * count
    bool gamma_side_bound = false;     // cut_gamma >= lp_value * pi_min
    bool coherence = false;            // sum gamma <= alpha * count
    bool all_ok() const {
        return karger.ok && i1_laminar && i2_dominance && objective_preserved &&
               gamma_feasible && theorem1_inequality && beta_side_bound &&
               gamma_side_bound && coherence;
    }

    explicit ChainReport(std::vector<std::string> terminals)
        : beta(terminals), gamma_lp(terminals), gamma(std::move(terminals)) {}
};

// Builds the counting theorem's objects on a concrete instance and checks
// that they cohere: indicator beta, the primal optimum for D_beta, its
// laminar uncrossing, and the inequality chain bounding the count.
ChainReport theorem2_chain(const Graph& g, int alpha);

}  // namespace termcut
