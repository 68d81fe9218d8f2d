#include "termcut/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "termcut/error.hpp"

namespace termcut {

namespace {

void require_same_terminals(const Graph& g, const TypeVector& v, const char* who) {
    if (g.terminal_ids() != v.terminals())
        throw InvalidInput(std::string(who) + ": type vector terminals differ from graph");
}

std::string set_label(const Graph& g, Mask s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i : mask_indices(s)) {
        if (!first) out << ',';
        out << g.vertex_id(g.terminals()[i]);
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace

DistTable shortest_distances(const Graph& g, const EdgeLengths& ell) {
    if (ell.size() != g.edges().size())
        throw InvalidInput("shortest_distances: length table does not match edge set");
    int n = g.vertex_count();
    DistTable table;
    table.n = n;
    table.d.assign(static_cast<std::size_t>(n) * n, std::nullopt);
    auto entry = [&](int i, int j) -> std::optional<Rat>& {
        return table.d[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i) entry(i, i) = Rat(0);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        int u = g.edges()[e].u, v = g.edges()[e].v;
        if (!entry(u, v) || *entry(u, v) > ell[e]) {
            entry(u, v) = ell[e];
            entry(v, u) = ell[e];
        }
    }
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i) {
            if (!entry(i, m)) continue;
            for (int j = 0; j < n; ++j) {
                if (!entry(m, j)) continue;
                Rat through = *entry(i, m) + *entry(m, j);
                if (!entry(i, j) || *entry(i, j) > through) entry(i, j) = through;
            }
        }
    return table;
}

namespace {

// Keeps lists sorted, strips empties, merges touching runs.
IntervalList normalize(IntervalList list) {
    list.erase(std::remove_if(list.begin(), list.end(),
                              [](const Interval& i) { return i.lo >= i.hi; }),
               list.end());
    std::sort(list.begin(), list.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalList out;
    for (const Interval& i : list) {
        if (!out.empty() && out.back().hi >= i.lo)
            out.back().hi = std::max(out.back().hi, i.hi);
        else
            out.push_back(i);
    }
    return out;
}

}  // namespace

IntervalList interval_union(const IntervalList& a, const IntervalList& b) {
    IntervalList merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    return normalize(std::move(merged));
}

IntervalList interval_difference(const IntervalList& a, const IntervalList& b) {
    IntervalList out;
    for (const Interval& piece : a) {
        Rat lo = piece.lo;
        for (const Interval& hole : b) {
            if (hole.hi <= lo) continue;
            if (hole.lo >= piece.hi) break;
            if (hole.lo > lo) out.push_back({lo, std::min(hole.lo, piece.hi)});
            lo = std::max(lo, hole.hi);
            if (lo >= piece.hi) break;
        }
        if (lo < piece.hi) out.push_back({lo, piece.hi});
    }
    return normalize(std::move(out));
}

Rat intervals_total_length(const IntervalList& intervals) {
    Rat total(0);
    for (const Interval& i : intervals) total += i.hi - i.lo;
    return total;
}

AccumulationDetail accumulate_lengths_detail(const Graph& g, const TypeVector& beta) {
    require_same_terminals(g, beta, "accumulate_lengths");
    if (beta.empty()) throw InvalidInput("accumulate_lengths: empty support");
    AccumulationDetail detail{EdgeLengths(g.edges().size(), Rat(0)),
                              TypeVector(g.terminal_ids())};
    std::vector<Mask> order = beta.support();
    std::sort(order.begin(), order.end(), canonical_less);
    for (Mask s : order) {
        CutResult cut = terminal_cut(g, s);
        for (int e : cut.cut_edges) detail.lengths[e] += beta.value(s);
        detail.cut_values.set(s, cut.value);
    }
    return detail;
}

EdgeLengths accumulate_lengths(const Graph& g, const TypeVector& beta) {
    return accumulate_lengths_detail(g, beta).lengths;
}

IntervalList edge_region_intervals(const Graph& g, int edge_index, const Rat& edge_length,
                                   const DistTable& dist, const std::vector<Rat>& old_radii,
                                   const Rat& gamma_s, Mask s) {
    const Edge& e = g.edges()[edge_index];
    if (edge_length == 0) return {};

    // The union over t in S of balls B(t, r_t) meets the segment in a prefix
    // from u plus a suffix into v: a point at offset x from u lies in B(t, r)
    // iff dist(t,u) + x < r or dist(t,v) + (len - x) < r.
    auto ball_union = [&](bool grown) {
        Rat from_u(0), from_v(0);
        for (int i : mask_indices(s)) {
            int t = g.terminals()[i];
            Rat radius = old_radii[i];
            if (grown) radius += gamma_s;
            if (dist.at(t, e.u)) from_u = std::max(from_u, Rat(radius - *dist.at(t, e.u)));
            if (dist.at(t, e.v)) from_v = std::max(from_v, Rat(radius - *dist.at(t, e.v)));
        }
        from_u = std::min(std::max(from_u, Rat(0)), edge_length);
        from_v = std::min(std::max(from_v, Rat(0)), edge_length);
        IntervalList list;
        if (from_u > 0) list.push_back({Rat(0), from_u});
        if (from_v > 0) list.push_back({edge_length - from_v, edge_length});
        return interval_union(list, {});
    };

    return interval_difference(ball_union(true), ball_union(false));
}

LengthDecomposition build_length_decomposition(const Graph& g, const EdgeLengths& ell,
                                               const TypeVector& gamma) {
    require_same_terminals(g, gamma, "build_length_decomposition");
    if (ell.size() != g.edges().size())
        throw InvalidInput("build_length_decomposition: length table does not match edge set");
    if (!is_laminar(gamma.support()))
        throw InvalidInput("build_length_decomposition: support is not laminar");

    LengthDecomposition dec;
    dec.base = ell;
    DistTable dist = shortest_distances(g, ell);

    int k = g.terminal_count();
    std::vector<Rat> radii(k, Rat(0));
    std::vector<Mask> order = gamma.support();
    // Subsets precede supersets: nested sets have strictly smaller cardinality.
    std::sort(order.begin(), order.end(), canonical_less);

    for (Mask s : order) {
        RadiiStep step;
        step.set = s;
        step.before = radii;

        std::vector<IntervalList> per_edge(g.edges().size());
        EdgeLengths part(g.edges().size(), Rat(0));
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            per_edge[e] = edge_region_intervals(g, static_cast<int>(e), ell[e], dist, radii,
                                                gamma.value(s), s);
            part[e] = intervals_total_length(per_edge[e]);
        }
        dec.parts.emplace_back(s, std::move(part));
        dec.regions.emplace_back(s, std::move(per_edge));

        for (int i : mask_indices(s)) radii[i] += gamma.value(s);
        step.after = radii;
        dec.radii_trace.push_back(std::move(step));
    }
    return dec;
}

DecompositionReport verify_decomposition(const Graph& g, const LengthDecomposition& dec,
                                         const TypeVector& gamma, const TypeVector& cutvec) {
    DecompositionReport report;
    auto fail = [&](bool& flag, const std::string& message) {
        flag = false;
        report.failures.push_back(message);
    };

    std::size_t m = g.edges().size();
    if (dec.base.size() != m || dec.parts.size() != dec.regions.size()) {
        fail(report.parts_consistent, "decomposition shape does not match graph");
        return report;
    }

    for (std::size_t p = 0; p < dec.parts.size(); ++p) {
        const auto& [s, lengths] = dec.parts[p];
        const auto& regions = dec.regions[p].second;
        if (dec.regions[p].first != s || lengths.size() != m || regions.size() != m) {
            fail(report.parts_consistent, "part/region mismatch for " + set_label(g, s));
            continue;
        }
        for (std::size_t e = 0; e < m; ++e) {
            const IntervalList& list = regions[e];
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (list[i].lo < 0 || list[i].hi > dec.base[e] || list[i].lo >= list[i].hi)
                    fail(report.parts_consistent,
                         "malformed interval for " + set_label(g, s));
                if (i + 1 < list.size() && list[i].hi >= list[i + 1].lo)
                    fail(report.parts_consistent,
                         "unsorted intervals for " + set_label(g, s));
            }
            if (intervals_total_length(list) != lengths[e])
                fail(report.parts_consistent,
                     "length differs from intervals for " + set_label(g, s));
            if (list.size() > 2)
                fail(report.case_bound, set_label(g, s) + " has " +
                                            std::to_string(list.size()) +
                                            " intervals on one edge");
        }
    }

    // Region disjointness across sets, edge by edge; with it, P1 reduces to
    // the intervals fitting inside [0, ell_e].
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<std::pair<Interval, Mask>> all;
        Rat part_total(0);
        for (std::size_t p = 0; p < dec.regions.size(); ++p) {
            for (const Interval& i : dec.regions[p].second[e])
                all.emplace_back(i, dec.regions[p].first);
            part_total += dec.parts[p].second[e];
        }
        std::sort(all.begin(), all.end(),
                  [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            if (all[i].first.hi > all[i + 1].first.lo) {
                fail(report.regions_disjoint,
                     "regions of " + set_label(g, all[i].second) + " and " +
                         set_label(g, all[i + 1].second) + " overlap on edge " +
                         g.vertex_id(g.edges()[e].u) + "-" + g.vertex_id(g.edges()[e].v));
                break;
            }
        }
        if (part_total > dec.base[e])
            fail(report.p1, "total part length exceeds base length on edge " +
                                g.vertex_id(g.edges()[e].u) + "-" +
                                g.vertex_id(g.edges()[e].v));
    }

    // P2 and the cut-separation bound, one part at a time.
    Mask full = full_mask(g.terminal_count());
    for (const auto& [s, lengths] : dec.parts) {
        Rat weighted(0);
        for (std::size_t e = 0; e < m; ++e) weighted += g.edges()[e].capacity * lengths[e];
        if (weighted < gamma.value(s) * cutvec.value(s))
            fail(report.p2, "weighted part length below gamma * cut for " + set_label(g, s));

        DistTable dist = shortest_distances(g, lengths);
        for (int i : mask_indices(s)) {
            for (int j : mask_indices(full ^ s)) {
                const auto& d = dist.at(g.terminals()[i], g.terminals()[j]);
                if (d && *d < gamma.value(s)) {
                    fail(report.separation,
                         "terminals " + g.vertex_id(g.terminals()[i]) + "," +
                             g.vertex_id(g.terminals()[j]) + " closer than gamma under " +
                             set_label(g, s) + " lengths");
                }
            }
        }
    }

    // Radii: nondecreasing, and for disjoint sets processed in order, the
    // radius sum never exceeds the induced distance.
    TerminalMetric dgamma = induced_metric(gamma);
    for (std::size_t j = 0; j < dec.radii_trace.size(); ++j) {
        const RadiiStep& step = dec.radii_trace[j];
        for (std::size_t t = 0; t < step.before.size(); ++t)
            if (step.after[t] < step.before[t])
                fail(report.radii_monotone, "radius decreased at " + set_label(g, step.set));
        for (std::size_t i = 0; i < j; ++i) {
            Mask p = dec.radii_trace[i].set;
            if ((p & step.set) != 0) continue;
            for (int a : mask_indices(p))
                for (int b : mask_indices(step.set))
                    if (step.after[a] + step.after[b] > dgamma.at(a, b))
                        fail(report.radii_monotone,
                             "radius sum exceeds induced distance for " + set_label(g, p) +
                                 " vs " + set_label(g, step.set));
        }
    }

    return report;
}

Theorem1Result verify_theorem1(const Graph& g, const TypeVector& beta,
                               const TypeVector& gamma) {
    require_same_terminals(g, beta, "verify_theorem1");
    require_same_terminals(g, gamma, "verify_theorem1");

    Theorem1Result result(g.terminal_ids());
    result.laminar_ok = is_laminar(gamma.support());
    TerminalMetric d_beta = induced_metric(beta);
    TerminalMetric d_gamma = induced_metric(gamma);
    result.dominance_ok = dominates(d_beta, d_gamma, &result.dominance_witness);
    if (!result.premises_ok()) return result;

    AccumulationDetail acc{EdgeLengths(g.edges().size(), Rat(0)),
                           TypeVector(g.terminal_ids())};
    if (!beta.empty()) acc = accumulate_lengths_detail(g, beta);
    result.lengths = acc.lengths;
    result.cut_values = acc.cut_values;
    for (Mask s : gamma.support())
        if (!result.cut_values.has(s)) result.cut_values.set(s, terminal_cut(g, s).value);

    result.lhs = weighted_cut(result.cut_values, beta);
    result.rhs = weighted_cut(result.cut_values, gamma);
    result.inequality_ok = result.lhs >= result.rhs;

    Rat total(0);
    for (std::size_t e = 0; e < g.edges().size(); ++e)
        total += g.edges()[e].capacity * result.lengths[e];
    result.obs_total_ok = total == result.lhs;

    DistTable dist = shortest_distances(g, result.lengths);
    result.obs_dist_ok = true;
    int k = g.terminal_count();
    for (int i = 0; i < k && result.obs_dist_ok; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const auto& d = dist.at(g.terminals()[i], g.terminals()[j]);
            if (d && *d < d_beta.at(i, j)) {
                result.obs_dist_ok = false;
                break;
            }
        }
    }

    result.dec = build_length_decomposition(g, result.lengths, gamma);
    result.report = verify_decomposition(g, result.dec, gamma, result.cut_values);
    result.evaluated = true;
    return result;
}

}  // namespace termcut
