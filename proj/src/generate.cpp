#include "termcut/generate.hpp"

#include <algorithm>
#include <set>

#include "termcut/error.hpp"

namespace termcut {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InvalidInput("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        std::uint64_t x = engine_();
        if (x < limit) return x % n;
    }
}

int Rng::range(int lo, int hi) {
    if (lo > hi) throw InvalidInput("Rng::range: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rat Rng::positive_rational(int max_numerator, int max_denominator) {
    Rat r(range(1, max_numerator), range(1, max_denominator));
    r.canonicalize();
    return r;
}

Graph random_graph(Rng& rng, const GraphParams& params) {
    if (params.terminals < 2 || params.terminals > params.vertices)
        throw InvalidInput("random_graph: bad terminal count");
    std::vector<std::string> names(params.vertices);
    for (int i = 0; i < params.terminals; ++i) names[i] = "t" + std::to_string(i + 1);
    for (int i = params.terminals; i < params.vertices; ++i)
        names[i] = "v" + std::to_string(i - params.terminals + 1);

    std::set<std::pair<int, int>> used;
    std::vector<std::tuple<std::string, std::string, Rat>> edges;
    auto add_edge = [&](int u, int v) {
        if (u == v) return false;
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (!used.insert(key).second) return false;
        edges.emplace_back(names[key.first], names[key.second],
                           rng.positive_rational(params.max_numerator, params.max_denominator));
        return true;
    };

    if (params.connected) {
        for (int v = 1; v < params.vertices; ++v) add_edge(v, rng.range(0, v - 1));
    }
    int attempts = 0;
    int placed = 0;
    int budget = 20 * params.extra_edges + 40;
    while (placed < params.extra_edges && attempts < budget) {
        ++attempts;
        if (add_edge(rng.range(0, params.vertices - 1), rng.range(0, params.vertices - 1)))
            ++placed;
    }

    std::vector<std::string> terminals(names.begin(), names.begin() + params.terminals);
    return Graph(std::move(terminals), std::move(edges));
}

namespace {

// Random recursive bipartition: every generated block is a candidate set.
void random_hierarchy(Rng& rng, Mask block, std::vector<Mask>& blocks) {
    blocks.push_back(block);
    std::vector<int> members = mask_indices(block);
    if (members.size() == 1) return;
    Mask left = 0;
    // Random nonempty proper split.
    do {
        left = 0;
        for (int i : members)
            if (rng.chance(1, 2)) left |= Mask{1} << i;
    } while (left == 0 || left == block);
    random_hierarchy(rng, left, blocks);
    random_hierarchy(rng, block ^ left, blocks);
}

}  // namespace

TypeVector random_laminar_gamma(Rng& rng, const std::vector<std::string>& terminals) {
    int k = static_cast<int>(terminals.size());
    std::vector<Mask> blocks;
    random_hierarchy(rng, full_mask(k), blocks);
    TypeVector gamma(terminals);
    for (Mask block : blocks) {
        if (block == full_mask(k)) continue;
        if (rng.chance(2, 3)) gamma.set(block, rng.positive_rational(6, 4));
    }
    // Keep at least one supported set so downstream premises are non-vacuous.
    if (gamma.empty()) gamma.set(Mask{1}, rng.positive_rational(6, 4));
    return gamma;
}

TypeVector dominating_beta(Rng& rng, const TypeVector& gamma) {
    const std::vector<std::string>& terminals = gamma.terminals();
    int k = static_cast<int>(terminals.size());
    TypeVector base(terminals);
    Mask full = full_mask(k);
    int extra = rng.range(0, 2 * k);
    for (int i = 0; i < extra; ++i) {
        Mask s = static_cast<Mask>(rng.below(full - 1)) + 1;  // 1..full-1
        base.add(s, rng.positive_rational(6, 4));
    }
    // Singletons make every pair cut with positive weight.
    for (int i = 0; i < k; ++i) base.add(Mask{1} << i, rng.positive_rational(4, 4));

    TerminalMetric d_base = induced_metric(base);
    TerminalMetric d_gamma = induced_metric(gamma);
    Rat lambda(0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (d_gamma.at(i, j) > 0)
                lambda = std::max(lambda, Rat(d_gamma.at(i, j) / d_base.at(i, j)));
    if (lambda == 0) lambda = 1;
    return tv_scale(base, lambda);
}

TypeVector random_typevector(Rng& rng, const std::vector<std::string>& terminals,
                             int support_size) {
    int k = static_cast<int>(terminals.size());
    TypeVector v(terminals);
    Mask full = full_mask(k);
    for (int i = 0; i < support_size; ++i) {
        Mask s = static_cast<Mask>(rng.below(full - 1)) + 1;
        v.add(s, rng.positive_rational(6, 4));
    }
    return v;
}

SpanningTree random_tree(Rng& rng, const std::vector<std::string>& terminals,
                         const TerminalMetric& d) {
    int k = static_cast<int>(terminals.size());
    SpanningTree tree;
    tree.terminals = terminals;
    tree.cost = 0;
    for (int v = 1; v < k; ++v) {
        int parent = rng.range(0, v - 1);
        tree.edges.emplace_back(parent, v);
        tree.cost += d.at(parent, v);
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

}  // namespace termcut
