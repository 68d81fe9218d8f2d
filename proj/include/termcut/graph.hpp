#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "termcut/rational.hpp"
#include "termcut/subset.hpp"
#include "termcut/typevec.hpp"

namespace termcut {

// Undirected edge with exact positive capacity. Endpoints are vertex
// indices with id(u) < id(v) lexicographically.
struct Edge {
    int u;
    int v;
    Rat capacity;
};

// Immutable edge-capacitated graph with a distinguished ordered terminal
// set. Parallel edges are merged at construction, self-loops rejected.
// Vertex indices: terminals first (in the given order), then the remaining
// endpoints sorted by identifier. Edges sorted by identifier pair.
class Graph {
   public:
    Graph(std::vector<std::string> terminals,
          std::vector<std::tuple<std::string, std::string, Rat>> edges);

    // One statement per line: `terminals a b c` first, then `edge u v cap`;
    // '#' starts a comment. Capacities are positive "p/q" or integers.
    static Graph parse(std::istream& in);
    static Graph parse_string(const std::string& text);
    static Graph load(const std::string& path);
    std::string emit() const;

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int terminal_count() const { return static_cast<int>(terminals_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const std::vector<int>& terminals() const { return terminals_; }
    std::vector<std::string> terminal_ids() const;
    bool is_terminal(int v) const;
    int vertex_index(const std::string& id) const;  // -1 if absent
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return vertex_ids_ == other.vertex_ids_ && terminals_ == other.terminals_ &&
               edge_tuples() == other.edge_tuples();
    }

   private:
    std::vector<std::tuple<int, int, Rat>> edge_tuples() const;

    std::vector<std::string> vertex_ids_;
    std::map<std::string, int> index_;
    std::vector<int> terminals_;
    std::vector<Edge> edges_;
};

// Minimum cut between two vertex groups. source_side is the canonical
// minimal side: vertices reachable from the sources in the residual graph
// of a maximum flow (unique across all maximum flows).
struct CutResult {
    Rat value;
    std::vector<int> cut_edges;    // indices into Graph::edges()
    std::vector<int> source_side;  // sorted vertex indices
};

CutResult max_flow_min_cut(const Graph& g, const std::vector<int>& sources,
                           const std::vector<int>& sinks);

// Min cut separating the terminals in `s` from the rest of T; steiner
// vertices fall on whichever side is cheaper.
CutResult terminal_cut(const Graph& g, Mask s);

// cut_G(S) for every proper nonempty S, as a (sparse, zero-dropping)
// type vector over the graph's terminals.
TypeVector cut_vector(const Graph& g, int enumeration_limit = kEnumerationLimit);

struct MinTerminalCut {
    Rat value;     // Pi
    Mask witness;  // lexicographically-first minimizer
};
MinTerminalCut min_terminal_cut(const Graph& g, int enumeration_limit = kEnumerationLimit);

// Independent oracle: exhaustive scan over all vertex bipartitions placing
// s on one side and T \ s on the other. Requires at most 14 vertices.
Rat brute_force_cut(const Graph& g, Mask s);

// Scales g1 by a and g2 by b (both positive), identifies corresponding
// terminals, and renames colliding non-terminal vertices of g2. The result
// realizes a*cut_vector(g1) + b*cut_vector(g2).
Graph combine_realizations(const Graph& g1, const Graph& g2, const Rat& a, const Rat& b);

}  // namespace termcut
