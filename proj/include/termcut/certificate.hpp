#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "termcut/graph.hpp"
#include "termcut/typevec.hpp"

namespace termcut {

// Edge lengths aligned with Graph::edges().
using EdgeLengths = std::vector<Rat>;

// Exact all-pairs shortest-path distances; nullopt = unreachable.
struct DistTable {
    int n = 0;
    std::vector<std::optional<Rat>> d;
    const std::optional<Rat>& at(int i, int j) const {
        return d[static_cast<std::size_t>(i) * n + j];
    }
};

DistTable shortest_distances(const Graph& g, const EdgeLengths& ell);

// Half-open [lo, hi), lo < hi. Lists are sorted, disjoint, adjacent runs
// merged, so the interval count matches the sub-segment count.
struct Interval {
    Rat lo;
    Rat hi;
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};
using IntervalList = std::vector<Interval>;

IntervalList interval_union(const IntervalList& a, const IntervalList& b);
IntervalList interval_difference(const IntervalList& a, const IntervalList& b);
Rat intervals_total_length(const IntervalList& intervals);

// Starting from zero, adds beta_S to every edge of the canonical min cut
// of each support set, in canonical order.
EdgeLengths accumulate_lengths(const Graph& g, const TypeVector& beta);

// Same, also reporting each support set's cut value (= the min-cut values
// the accumulation used).
struct AccumulationDetail {
    EdgeLengths lengths;
    TypeVector cut_values;
};
AccumulationDetail accumulate_lengths_detail(const Graph& g, const TypeVector& beta);

// Intersection of the annulus grown from S (old radii -> old radii + gamma_s)
// with one edge, in coordinates from the canonical endpoint. At most two
// sub-segments.
IntervalList edge_region_intervals(const Graph& g, int edge_index, const Rat& edge_length,
                                   const DistTable& dist, const std::vector<Rat>& old_radii,
                                   const Rat& gamma_s, Mask s);

struct RadiiStep {
    Mask set;
    std::vector<Rat> before;  // per terminal, in terminal order
    std::vector<Rat> after;
};

// The edge-length certificate: base lengths, one length function per
// support set of gamma, the region intervals behind them, and the radii
// evolution of the ball-growing pass.
struct LengthDecomposition {
    EdgeLengths base;
    std::vector<std::pair<Mask, EdgeLengths>> parts;               // processing order
    std::vector<std::pair<Mask, std::vector<IntervalList>>> regions;  // per edge
    std::vector<RadiiStep> radii_trace;
};

LengthDecomposition build_length_decomposition(const Graph& g, const EdgeLengths& ell,
                                               const TypeVector& gamma);

struct DecompositionReport {
    bool parts_consistent = true;  // lengths match intervals, intervals well-formed
    bool case_bound = true;        // at most 2 intervals per (set, edge)
    bool regions_disjoint = true;  // across sets, on every edge
    bool p1 = true;                // per edge, sum of part lengths <= base length
    bool p2 = true;                // per set, weighted part length >= gamma_S * cut(S)
    bool separation = true;        // dist under part lengths >= gamma_S across the cut
    bool radii_monotone = true;    // nondecreasing + disjoint-pair radius bound
    std::vector<std::string> failures;
    bool all_ok() const {
        return parts_consistent && case_bound && regions_disjoint && p1 && p2 && separation &&
               radii_monotone;
    }
};

// Re-checks the certificate from scratch. cutvec must carry cut_G(S) for
// every S in supp(gamma). Failures are reported, never thrown.
DecompositionReport verify_decomposition(const Graph& g, const LengthDecomposition& dec,
                                         const TypeVector& gamma, const TypeVector& cutvec);

struct Theorem1Result {
    bool laminar_ok = false;
    bool dominance_ok = false;
    std::pair<int, int> dominance_witness{-1, -1};
    bool evaluated = false;  // premises held, certificate was built
    Rat lhs;                 // cut_G(beta)
    Rat rhs;                 // cut_G(gamma)
    bool inequality_ok = false;
    bool obs_dist_ok = false;   // dist_ell dominates D_beta on terminal pairs
    bool obs_total_ok = false;  // sum c(e) * ell_e equals cut_G(beta)
    EdgeLengths lengths;
    TypeVector cut_values;  // cut_G(S) for supp(beta) and supp(gamma)
    LengthDecomposition dec;
    DecompositionReport report;

    bool premises_ok() const { return laminar_ok && dominance_ok; }
    bool holds() const {
        return premises_ok() && inequality_ok && obs_dist_ok && obs_total_ok &&
               report.all_ok();
    }

    explicit Theorem1Result(std::vector<std::string> terminals)
        : cut_values(std::move(terminals)) {}
};

// Checks the premises, and when they hold computes both weighted cuts,
// builds the certificate, and verifies it end to end.
Theorem1Result verify_theorem1(const Graph& g, const TypeVector& beta,
                               const TypeVector& gamma);

}  // namespace termcut
