#include "termcut/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "termcut/error.hpp"

namespace termcut {

Graph::Graph(std::vector<std::string> terminals,
             std::vector<std::tuple<std::string, std::string, Rat>> edges) {
    if (terminals.size() < 2) throw InvalidInput("graph needs at least 2 terminals");
    if (terminals.size() > 31) throw InvalidInput("too many terminals");
    for (const auto& t : terminals)
        if (t.empty()) throw InvalidInput("empty terminal identifier");
    {
        std::set<std::string> seen;
        for (const auto& t : terminals)
            if (!seen.insert(t).second) throw InvalidInput("duplicate terminal: " + t);
    }

    std::set<std::string> steiner;
    for (const auto& [u, v, cap] : edges) {
        if (u.empty() || v.empty()) throw InvalidInput("empty vertex identifier");
        if (u == v) throw InvalidInput("self-loop at vertex " + u);
        if (cap <= 0) throw InvalidInput("capacity must be positive on edge " + u + " " + v);
        steiner.insert(u);
        steiner.insert(v);
    }
    for (const auto& t : terminals) steiner.erase(t);

    for (const auto& t : terminals) {
        index_[t] = static_cast<int>(vertex_ids_.size());
        terminals_.push_back(static_cast<int>(vertex_ids_.size()));
        vertex_ids_.push_back(t);
    }
    for (const auto& s : steiner) {
        index_[s] = static_cast<int>(vertex_ids_.size());
        vertex_ids_.push_back(s);
    }

    // Merge parallel edges keyed by the identifier-ordered endpoint pair.
    std::map<std::pair<std::string, std::string>, Rat> merged;
    for (const auto& [u, v, cap] : edges) {
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        merged[key] += cap;
    }
    for (const auto& [key, cap] : merged)
        edges_.push_back(Edge{index_.at(key.first), index_.at(key.second), cap});
}

Graph Graph::parse(std::istream& in) {
    std::vector<std::string> terminals;
    std::vector<std::tuple<std::string, std::string, Rat>> edges;
    bool have_terminals = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        if (keyword == "terminals") {
            if (have_terminals)
                throw InvalidInput("line " + std::to_string(lineno) + ": duplicate terminals statement");
            std::string id;
            while (ls >> id) terminals.push_back(id);
            if (terminals.size() < 2)
                throw InvalidInput("line " + std::to_string(lineno) + ": need at least 2 terminals");
            have_terminals = true;
        } else if (keyword == "edge") {
            if (!have_terminals)
                throw InvalidInput("line " + std::to_string(lineno) +
                                   ": terminals statement must come first");
            std::string u, v, cap;
            if (!(ls >> u >> v >> cap))
                throw InvalidInput("line " + std::to_string(lineno) + ": edge needs u v capacity");
            std::string extra;
            if (ls >> extra)
                throw InvalidInput("line " + std::to_string(lineno) + ": trailing tokens");
            edges.emplace_back(u, v, parse_positive_rational(cap));
        } else {
            throw InvalidInput("line " + std::to_string(lineno) + ": unknown statement '" +
                               keyword + "'");
        }
    }
    if (!have_terminals) throw InvalidInput("missing terminals statement");
    return Graph(std::move(terminals), std::move(edges));
}

Graph Graph::parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

Graph Graph::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open graph file: " + path);
    return parse(in);
}

std::string Graph::emit() const {
    std::ostringstream out;
    out << "terminals";
    for (int t : terminals_) out << ' ' << vertex_ids_[t];
    out << '\n';
    for (const Edge& e : edges_)
        out << "edge " << vertex_ids_[e.u] << ' ' << vertex_ids_[e.v] << ' '
            << rat_str(e.capacity) << '\n';
    return out.str();
}

std::vector<std::string> Graph::terminal_ids() const {
    std::vector<std::string> out;
    out.reserve(terminals_.size());
    for (int t : terminals_) out.push_back(vertex_ids_[t]);
    return out;
}

bool Graph::is_terminal(int v) const {
    return std::find(terminals_.begin(), terminals_.end(), v) != terminals_.end();
}

int Graph::vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::tuple<int, int, Rat>> Graph::edge_tuples() const {
    std::vector<std::tuple<int, int, Rat>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v, e.capacity);
    return out;
}

namespace {

// Dinic on the contracted network. Terminates exactly on rationals: the
// phase count is bounded by the vertex count, independent of capacities.
class Dinic {
   public:
    explicit Dinic(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_undirected(int u, int v, const Rat& cap) {
        add_arc(u, v, cap);
        add_arc(v, u, cap);
    }

    Rat run(int s, int t) {
        Rat flow(0);
        while (bfs(s, t)) {
            std::copy(head_.begin(), head_.end(), iter_.begin());
            for (;;) {
                Rat pushed = dfs(s, t, Rat(-1));
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a != -1; a = next_[a]) {
                if (residual_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = 1;
                    stack.push_back(to_[a]);
                }
            }
        }
        return seen;
    }

   private:
    void add_arc(int u, int v, const Rat& cap) {
        to_.push_back(v);
        residual_.push_back(cap);
        next_.push_back(head_[u]);
        head_[u] = static_cast<int>(to_.size()) - 1;
    }

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{s};
        level_[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int a = head_[u]; a != -1; a = next_[a]) {
                if (residual_[a] > 0 && level_[to_[a]] == -1) {
                    level_[to_[a]] = level_[u] + 1;
                    queue.push_back(to_[a]);
                }
            }
        }
        return level_[t] != -1;
    }

    // limit < 0 means unbounded.
    Rat dfs(int u, int t, Rat limit) {
        if (u == t) return limit;
        for (int& a = iter_[u]; a != -1; a = next_[a]) {
            int v = to_[a];
            if (residual_[a] > 0 && level_[v] == level_[u] + 1) {
                Rat sub = limit < 0 ? residual_[a]
                                    : std::min(limit, residual_[a]);
                Rat pushed = dfs(v, t, sub);
                if (pushed > 0) {
                    residual_[a] -= pushed;
                    residual_[a ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        return Rat(0);
    }

    std::vector<int> head_, level_, iter_;
    std::vector<int> to_;
    std::vector<int> next_;
    std::vector<Rat> residual_;
};

}  // namespace

CutResult max_flow_min_cut(const Graph& g, const std::vector<int>& sources,
                           const std::vector<int>& sinks) {
    if (sources.empty() || sinks.empty())
        throw InvalidInput("max_flow_min_cut: empty source or sink set");
    int n = g.vertex_count();
    std::vector<int> side(n, 0);  // 1 = source group, 2 = sink group
    for (int v : sources) {
        if (v < 0 || v >= n) throw InvalidInput("max_flow_min_cut: bad vertex index");
        side[v] = 1;
    }
    for (int v : sinks) {
        if (v < 0 || v >= n) throw InvalidInput("max_flow_min_cut: bad vertex index");
        if (side[v] == 1) throw InvalidInput("max_flow_min_cut: sources and sinks overlap");
        side[v] = 2;
    }

    // Contract the source group into node 0 and the sink group into node 1.
    std::vector<int> node(n);
    int next_node = 2;
    for (int v = 0; v < n; ++v)
        node[v] = side[v] == 1 ? 0 : side[v] == 2 ? 1 : next_node++;

    std::map<std::pair<int, int>, Rat> contracted;
    for (const Edge& e : g.edges()) {
        int a = node[e.u], b = node[e.v];
        if (a == b) continue;
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        contracted[key] += e.capacity;
    }

    Dinic dinic(next_node);
    for (const auto& [key, cap] : contracted) dinic.add_undirected(key.first, key.second, cap);
    Rat flow = dinic.run(0, 1);
    std::vector<char> reach = dinic.residual_reachable(0);

    CutResult result;
    result.value = Rat(0);
    for (int v = 0; v < n; ++v)
        if (reach[node[v]]) result.source_side.push_back(v);
    std::set<int> in_side(result.source_side.begin(), result.source_side.end());
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        bool cu = in_side.count(edges[i].u) != 0;
        bool cv = in_side.count(edges[i].v) != 0;
        if (cu != cv) {
            result.cut_edges.push_back(i);
            result.value += edges[i].capacity;
        }
    }
    if (result.value != flow)
        throw std::logic_error("max_flow_min_cut: cut/flow mismatch");
    return result;
}

CutResult terminal_cut(const Graph& g, Mask s) {
    int k = g.terminal_count();
    Mask full = full_mask(k);
    if (s == 0 || s >= full)
        throw InvalidInput("terminal_cut: subset must be proper and nonempty");
    std::vector<int> sources, sinks;
    for (int i = 0; i < k; ++i)
        (contains(s, i) ? sources : sinks).push_back(g.terminals()[i]);
    return max_flow_min_cut(g, sources, sinks);
}

TypeVector cut_vector(const Graph& g, int enumeration_limit) {
    int k = g.terminal_count();
    if (k > enumeration_limit)
        throw ResourceLimit("cut_vector: " + std::to_string(k) + " terminals exceeds limit " +
                            std::to_string(enumeration_limit));
    TypeVector pi(g.terminal_ids());
    Mask full = full_mask(k);
    // The same cut separates S and its complement; evaluate each pair once.
    for (Mask s = 1; s < full; ++s) {
        if (!contains(s, 0)) continue;
        Rat value = terminal_cut(g, s).value;
        pi.set(s, value);
        pi.set(full ^ s, value);
    }
    return pi;
}

MinTerminalCut min_terminal_cut(const Graph& g, int enumeration_limit) {
    int k = g.terminal_count();
    if (k > enumeration_limit)
        throw ResourceLimit("min_terminal_cut: terminal count exceeds limit");
    TypeVector pi = cut_vector(g, enumeration_limit);
    Mask full = full_mask(k);
    bool first = true;
    MinTerminalCut best{Rat(0), 0};
    for (Mask s = 1; s < full; ++s) {
        Rat value = pi.value(s);
        if (first || value < best.value ||
            (value == best.value && lex_less(s, best.witness))) {
            best = {value, s};
            first = false;
        }
    }
    return best;
}

Rat brute_force_cut(const Graph& g, Mask s) {
    if (g.vertex_count() > 14)
        throw ResourceLimit("brute_force_cut: more than 14 vertices");
    int k = g.terminal_count();
    Mask full = full_mask(k);
    if (s == 0 || s >= full)
        throw InvalidInput("brute_force_cut: subset must be proper and nonempty");

    std::vector<int> free_vertices;
    std::vector<char> fixed_side(g.vertex_count(), 0);  // 1 = with s, 0 = other
    std::vector<char> is_fixed(g.vertex_count(), 0);
    for (int i = 0; i < k; ++i) {
        int v = g.terminals()[i];
        is_fixed[v] = 1;
        fixed_side[v] = contains(s, i) ? 1 : 0;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_fixed[v]) free_vertices.push_back(v);

    bool first = true;
    Rat best(0);
    std::vector<char> side(g.vertex_count());
    for (std::uint32_t placement = 0; placement < (1u << free_vertices.size()); ++placement) {
        for (int v = 0; v < g.vertex_count(); ++v) side[v] = fixed_side[v];
        for (std::size_t i = 0; i < free_vertices.size(); ++i)
            side[free_vertices[i]] = (placement >> i) & 1u;
        Rat total(0);
        for (const Edge& e : g.edges())
            if (side[e.u] != side[e.v]) total += e.capacity;
        if (first || total < best) {
            best = total;
            first = false;
        }
    }
    return best;
}

Graph combine_realizations(const Graph& g1, const Graph& g2, const Rat& a, const Rat& b) {
    if (a <= 0 || b <= 0)
        throw InvalidInput("combine_realizations: scale factors must be positive");
    std::vector<std::string> t1 = g1.terminal_ids();
    std::vector<std::string> t2 = g2.terminal_ids();
    {
        std::set<std::string> s1(t1.begin(), t1.end()), s2(t2.begin(), t2.end());
        if (s1 != s2) throw InvalidInput("combine_realizations: terminal sets differ");
    }

    std::set<std::string> taken(g1.vertex_ids().begin(), g1.vertex_ids().end());
    std::map<std::string, std::string> rename;  // g2 vertex id -> combined id
    for (const auto& id : t2) rename[id] = id;
    for (const auto& id : g2.vertex_ids()) {
        if (rename.count(id)) continue;
        std::string fresh = id;
        while (taken.count(fresh)) fresh += "'";
        taken.insert(fresh);
        rename[id] = fresh;
    }

    std::vector<std::tuple<std::string, std::string, Rat>> edges;
    for (const Edge& e : g1.edges())
        edges.emplace_back(g1.vertex_id(e.u), g1.vertex_id(e.v), a * e.capacity);
    for (const Edge& e : g2.edges())
        edges.emplace_back(rename.at(g2.vertex_id(e.u)), rename.at(g2.vertex_id(e.v)),
                           b * e.capacity);
    return Graph(t1, std::move(edges));
}

}  // namespace termcut
