#include "termcut/lp_cuts.hpp"

#include <algorithm>
#include <sstream>

#include "termcut/error.hpp"

namespace termcut {

namespace {

std::string subset_name(const std::vector<std::string>& terminals, Mask s) {
    std::ostringstream out;
    out << "g{";
    bool first = true;
    for (int i : mask_indices(s)) {
        if (!first) out << ',';
        out << terminals[i];
        first = false;
    }
    out << '}';
    return out.str();
}

void check_limit(int k, int enumeration_limit, const char* who) {
    if (k > enumeration_limit)
        throw ResourceLimit(std::string(who) + ": " + std::to_string(k) +
                            " terminals exceeds limit " + std::to_string(enumeration_limit));
}

}  // namespace

LPProblem build_primal(const TerminalMetric& d, int enumeration_limit) {
    int k = d.terminal_count();
    check_limit(k, enumeration_limit, "build_primal");
    LPProblem lp;
    lp.direction = Direction::Maximize;
    std::vector<Mask> subsets = proper_subsets_canonical(k);
    for (Mask s : subsets) {
        int var = lp.add_variable(subset_name(d.terminals(), s));
        lp.add_objective(var, Rat(1));
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            LinearConstraint row;
            row.sense = Sense::LE;
            row.rhs = d.at(i, j);
            for (std::size_t v = 0; v < subsets.size(); ++v)
                if (cuts_pair(subsets[v], i, j))
                    row.terms.emplace_back(static_cast<int>(v), Rat(1));
            lp.constraints.push_back(std::move(row));
        }
    }
    return lp;
}

LPProblem build_dual(const TerminalMetric& d, int enumeration_limit) {
    int k = d.terminal_count();
    check_limit(k, enumeration_limit, "build_dual");
    LPProblem lp;
    lp.direction = Direction::Minimize;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int var = lp.add_variable("x{" + d.terminals()[i] + "," + d.terminals()[j] + "}");
            lp.add_objective(var, d.at(i, j));
            pairs.emplace_back(i, j);
        }
    }
    for (Mask s : proper_subsets_canonical(k)) {
        LinearConstraint row;
        row.sense = Sense::GE;
        row.rhs = 1;
        for (std::size_t v = 0; v < pairs.size(); ++v)
            if (cuts_pair(s, pairs[v].first, pairs[v].second))
                row.terms.emplace_back(static_cast<int>(v), Rat(1));
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

TypeVector primal_solution_to_typevector(const TerminalMetric& d, const LPSolution& solution) {
    if (solution.status != LPStatus::Optimal)
        throw InvalidInput("primal_solution_to_typevector: no optimal solution");
    std::vector<Mask> subsets = proper_subsets_canonical(d.terminal_count());
    if (solution.assignment.size() != subsets.size())
        throw InvalidInput("primal_solution_to_typevector: solution size mismatch");
    TypeVector gamma(d.terminals());
    for (std::size_t v = 0; v < subsets.size(); ++v) gamma.set(subsets[v], solution.assignment[v]);
    return gamma;
}

Rat uncross_potential(const TypeVector& gamma) {
    Rat total(0);
    for (const auto& [mask, value] : gamma.entries()) total += value * popcount(mask);
    return total;
}

TypeVector uncross_step(const TypeVector& gamma, Mask s, Mask s_prime) {
    const Rat m = gamma.value(s);
    const Rat m2 = gamma.value(s_prime);
    if (m <= 0 || m2 <= 0) throw InvalidInput("uncross_step: both coordinates must be positive");
    if (m > m2) throw InvalidInput("uncross_step: gamma_S must not exceed gamma_S'");
    Mask inter = s & s_prime, diff1 = s & ~s_prime, diff2 = s_prime & ~s;
    if (inter == 0 || diff1 == 0 || diff2 == 0)
        throw InvalidInput("uncross_step: sets do not cross");

    TypeVector out = gamma;
    out.set(s, Rat(0));
    out.set(s_prime, m2 - m);
    out.add(diff1, m);
    out.add(diff2, m);
    return out;
}

TypeVector uncross_to_laminar(const TypeVector& gamma, std::vector<UncrossEvent>* trace) {
    TypeVector current = gamma;
    for (;;) {
        std::vector<Mask> support = current.support();
        std::sort(support.begin(), support.end(), canonical_less);
        Mask a = 0, b = 0;
        bool found = false;
        for (std::size_t i = 0; i < support.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < support.size(); ++j) {
                if (!laminar_pair(support[i], support[j])) {
                    a = support[i];
                    b = support[j];
                    found = true;
                    break;
                }
            }
        }
        if (!found) return current;
        if (current.value(a) > current.value(b)) std::swap(a, b);
        UncrossEvent event{a, b, uncross_potential(current), Rat(0)};
        current = uncross_step(current, a, b);
        event.potential_after = uncross_potential(current);
        if (trace) trace->push_back(event);
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

SpanningTree mst(const TerminalMetric& d) {
    int k = d.terminal_count();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const auto& a, const auto& b) {
                         return d.at(a.first, a.second) < d.at(b.first, b.second);
                     });
    SpanningTree tree;
    tree.terminals = d.terminals();
    tree.cost = 0;
    UnionFind uf(k);
    for (const auto& [i, j] : pairs) {
        if (uf.unite(i, j)) {
            tree.edges.emplace_back(i, j);
            tree.cost += d.at(i, j);
        }
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

int tree_cut_edges(const SpanningTree& tau, Mask s) {
    int count = 0;
    for (const auto& [i, j] : tau.edges)
        if (cuts_pair(s, i, j)) ++count;
    return count;
}

std::pair<Mask, Mask> sets_cutting_exactly(const SpanningTree& tau,
                                           const std::vector<int>& edge_subset) {
    if (edge_subset.empty())
        throw InvalidInput("sets_cutting_exactly: edge subset must be nonempty");
    int k = static_cast<int>(tau.terminals.size());
    std::vector<char> removed(tau.edges.size(), 0);
    for (int e : edge_subset) {
        if (e < 0 || e >= static_cast<int>(tau.edges.size()))
            throw InvalidInput("sets_cutting_exactly: bad edge index");
        removed[e] = 1;
    }

    UnionFind uf(k);
    for (std::size_t e = 0; e < tau.edges.size(); ++e)
        if (!removed[e]) uf.unite(tau.edges[e].first, tau.edges[e].second);

    // Contracting the kept edges of a tree leaves a smaller tree on the
    // components, which is 2-colorable with alternation across each removed
    // edge; propagate colors from terminal 0's component.
    std::vector<int> color(k, -1);
    auto comp_color = [&](int v) -> int& { return color[uf.find(v)]; };
    comp_color(0) = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e : edge_subset) {
            int a = uf.find(tau.edges[e].first), b = uf.find(tau.edges[e].second);
            if (color[a] != -1 && color[b] == -1) {
                color[b] = 1 - color[a];
                changed = true;
            } else if (color[b] != -1 && color[a] == -1) {
                color[a] = 1 - color[b];
                changed = true;
            } else if (color[a] != -1 && color[a] == color[b]) {
                throw std::logic_error("sets_cutting_exactly: inconsistent coloring");
            }
        }
    }
    Mask with_first = 0;
    for (int v = 0; v < k; ++v) {
        if (color[uf.find(v)] == -1)
            throw std::logic_error("sets_cutting_exactly: component not reached");
        if (color[uf.find(v)] == 0) with_first |= Mask{1} << v;
    }
    return {with_first, full_mask(k) ^ with_first};
}

std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::int64_t result = 1;
    for (int i = 1; i <= r; ++i) result = result * (n - r + i) / i;
    return result;
}

namespace {

KargerResult karger_from_vector(const TypeVector& pi, int alpha) {
    int k = pi.terminal_count();
    if (alpha < 1 || 6 * alpha > k)
        throw InvalidInput("alpha must satisfy 1 <= alpha <= k/6");
    Mask full = full_mask(k);
    KargerResult result{Rat(0), 0, 0, 5 * binomial(k, 2 * alpha), false};
    bool first = true;
    for (Mask s = 1; s < full; ++s) {
        Rat value = pi.value(s);
        if (first || value < result.pi_min ||
            (value == result.pi_min && lex_less(s, result.pi_witness))) {
            result.pi_min = value;
            result.pi_witness = s;
            first = false;
        }
    }
    if (result.pi_min == 0)
        throw DegenerateInstance("minimum terminal cut is zero; counting bound needs Pi > 0");
    Rat threshold = Rat(alpha) * result.pi_min;
    for (Mask s = 1; s < full; ++s)
        if (pi.value(s) <= threshold) ++result.count;
    result.ok = result.count < result.bound;
    return result;
}

}  // namespace

KargerResult verify_karger_bound(const Graph& g, int alpha) {
    int k = g.terminal_count();
    if (alpha < 1 || 6 * alpha > k)
        throw InvalidInput("alpha must satisfy 1 <= alpha <= k/6");
    return karger_from_vector(cut_vector(g), alpha);
}

ChainReport theorem2_chain(const Graph& g, int alpha) {
    int k = g.terminal_count();
    if (alpha < 1 || 6 * alpha > k)
        throw InvalidInput("alpha must satisfy 1 <= alpha <= k/6");
    TypeVector pi = cut_vector(g);
    ChainReport report(g.terminal_ids());
    report.karger = karger_from_vector(pi, alpha);

    Rat threshold = Rat(alpha) * report.karger.pi_min;
    Mask full = full_mask(k);
    for (Mask s = 1; s < full; ++s)
        if (pi.value(s) <= threshold) report.beta.set(s, Rat(1));

    TerminalMetric d_beta = induced_metric(report.beta);
    LPProblem primal = build_primal(d_beta);
    LPSolution solution = solve_lp(primal);
    if (solution.status != LPStatus::Optimal)
        throw std::logic_error("theorem2_chain: primal should be feasible and bounded");
    report.lp_value = solution.value;
    report.gamma_lp = primal_solution_to_typevector(d_beta, solution);
    report.gamma = uncross_to_laminar(report.gamma_lp);

    report.i1_laminar = is_laminar(report.gamma.support());
    TerminalMetric d_gamma = induced_metric(report.gamma);
    report.i2_dominance = dominates(d_beta, d_gamma);

    Rat sum_gamma(0);
    for (const auto& [mask, value] : report.gamma.entries()) sum_gamma += value;
    report.objective_preserved = sum_gamma == report.lp_value;
    // Feasibility for the primal rows is exactly dominance of the metrics.
    report.gamma_feasible = report.i2_dominance;

    report.cut_beta = weighted_cut(pi, report.beta);
    report.cut_gamma = weighted_cut(pi, report.gamma);
    report.theorem1_inequality = report.cut_beta >= report.cut_gamma;
    report.beta_side_bound =
        report.cut_beta <= threshold * Rat(static_cast<long>(report.karger.count));
    report.gamma_side_bound = report.cut_gamma >= report.lp_value * report.karger.pi_min;
    report.coherence =
        sum_gamma <= Rat(alpha) * Rat(static_cast<long>(report.karger.count));
    return report;
}

}  // namespace termcut
