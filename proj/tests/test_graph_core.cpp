#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "termcut/error.hpp"
#include "termcut/generate.hpp"
#include "termcut/graph.hpp"

using namespace termcut;

namespace {

// Independent oracle: scan every vertex bipartition that keeps sources and
// sinks apart. Shares no code with the flow solver.
Rat enumerate_min_cut(const Graph& g, const std::vector<int>& sources,
                      const std::vector<int>& sinks) {
    int n = g.vertex_count();
    REQUIRE(n <= 20);
    bool first = true;
    Rat best(0);
    for (std::uint32_t side = 0; side < (1u << n); ++side) {
        bool valid = true;
        for (int v : sources)
            if (!((side >> v) & 1u)) valid = false;
        for (int v : sinks)
            if ((side >> v) & 1u) valid = false;
        if (!valid) continue;
        Rat total(0);
        for (const Edge& e : g.edges())
            if (((side >> e.u) & 1u) != ((side >> e.v) & 1u)) total += e.capacity;
        if (first || total < best) {
            best = total;
            first = false;
        }
    }
    REQUIRE(!first);
    return best;
}

Graph k4() {
    return Graph::parse_string(
        "terminals 1 2 3 4\n"
        "edge 1 2 1\nedge 1 3 1\nedge 1 4 1\nedge 2 3 1\nedge 2 4 1\nedge 3 4 1\n");
}

Graph star4() {
    return Graph::parse_string(
        "terminals t1 t2 t3 t4\n"
        "edge t1 c 1\nedge t2 c 1\nedge t3 c 1\nedge t4 c 1\n");
}

std::set<std::string> side_ids(const Graph& g, const CutResult& cut) {
    std::set<std::string> out;
    for (int v : cut.source_side) out.insert(g.vertex_id(v));
    return out;
}

}  // namespace

TEST_CASE("graph ingestion merges parallels and rejects bad edges") {
    Graph g = Graph::parse_string(
        "terminals a b\n"
        "# comment line\n"
        "edge a b 1/2\n"
        "edge b a 1/2   # merged with the one above\n");
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].capacity == Rat(1));

    CHECK_THROWS_AS(Graph::parse_string("terminals a b\nedge a a 1\n"), InvalidInput);
    CHECK_THROWS_AS(Graph::parse_string("terminals a b\nedge a b 0\n"), InvalidInput);
    CHECK_THROWS_AS(Graph::parse_string("terminals a b\nedge a b -1\n"), InvalidInput);
    CHECK_THROWS_AS(Graph::parse_string("edge a b 1\n"), InvalidInput);
    CHECK_THROWS_AS(Graph::parse_string("terminals a\n"), InvalidInput);
    CHECK_THROWS_AS(Graph::parse_string("terminals a b\nvertex c\n"), InvalidInput);
}

TEST_CASE("single edge min cut") {
    Graph g = Graph::parse_string("terminals a b\nedge a b 1\n");
    CutResult cut = max_flow_min_cut(g, {g.vertex_index("a")}, {g.vertex_index("b")});
    CHECK(cut.value == Rat(1));
    CHECK(cut.cut_edges.size() == 1);
    CHECK(side_ids(g, cut) == std::set<std::string>{"a"});
}

TEST_CASE("path picks the canonical minimal source side") {
    Graph g = Graph::parse_string("terminals a b\nedge a v 1\nedge v b 1\n");
    CutResult cut = max_flow_min_cut(g, {g.vertex_index("a")}, {g.vertex_index("b")});
    CHECK(cut.value == enumerate_min_cut(g, {g.vertex_index("a")}, {g.vertex_index("b")}));
    CHECK(cut.value == Rat(1));
    CHECK(side_ids(g, cut) == std::set<std::string>{"a"});
}

TEST_CASE("disconnected pair has a zero cut") {
    Graph g = Graph::parse_string("terminals a b\nedge a x 3\n");
    CutResult cut = max_flow_min_cut(g, {g.vertex_index("a")}, {g.vertex_index("b")});
    CHECK(cut.value == Rat(0));
    CHECK(cut.cut_edges.empty());
    CHECK(side_ids(g, cut) == std::set<std::string>{"a", "x"});
}

TEST_CASE("overlapping sources and sinks are rejected") {
    Graph g = Graph::parse_string("terminals a b\nedge a b 1\n");
    CHECK_THROWS_AS(max_flow_min_cut(g, {0}, {0}), InvalidInput);
    CHECK_THROWS_AS(max_flow_min_cut(g, {}, {0}), InvalidInput);
}

TEST_CASE("terminal cut on the steiner star") {
    Graph g = star4();
    CHECK(terminal_cut(g, 0b0011).value == Rat(2));
    CHECK(terminal_cut(g, 0b0001).value == Rat(1));
    CHECK_THROWS_AS(terminal_cut(g, 0), InvalidInput);
    CHECK_THROWS_AS(terminal_cut(g, 0b1111), InvalidInput);
}

TEST_CASE("K4 cut vector is 3/4/3 by cardinality") {
    TypeVector pi = cut_vector(k4());
    for (Mask s = 1; s < 15; ++s) {
        int size = popcount(s);
        CHECK(pi.value(s) == Rat(size == 2 ? 4 : 3));
    }
    CHECK(pi.entries().size() == 14);
}

TEST_CASE("cut vector trivia") {
    Graph edge = Graph::parse_string("terminals a b\nedge a b 5/2\n");
    TypeVector pi = cut_vector(edge);
    CHECK(pi.value(0b01) == Rat(5, 2));
    CHECK(pi.value(0b10) == Rat(5, 2));

    Graph edgeless = Graph::parse_string("terminals 1 2 3\n");
    TypeVector zero = cut_vector(edgeless);
    CHECK(zero.empty());
}

TEST_CASE("enumeration limit is enforced") {
    std::vector<std::string> terminals;
    std::vector<std::tuple<std::string, std::string, Rat>> edges;
    for (int i = 1; i <= 13; ++i) terminals.push_back("t" + std::to_string(i));
    for (int i = 1; i < 13; ++i)
        edges.emplace_back("t" + std::to_string(i), "t" + std::to_string(i + 1), Rat(1));
    Graph g(terminals, edges);
    CHECK_THROWS_AS(cut_vector(g), ResourceLimit);
}

TEST_CASE("minimum terminal cut with lexicographic witness") {
    // Unit 6-cycle: every arc has crossing capacity 2.
    Graph c6 = Graph::parse_string(
        "terminals 1 2 3 4 5 6\n"
        "edge 1 2 1\nedge 2 3 1\nedge 3 4 1\nedge 4 5 1\nedge 5 6 1\nedge 6 1 1\n");
    MinTerminalCut result = min_terminal_cut(c6);
    CHECK(result.value == Rat(2));
    CHECK(result.witness == Mask{1});  // {t1} is lexicographically first

    CHECK(min_terminal_cut(k4()).value == Rat(3));

    Graph edgeless = Graph::parse_string("terminals 1 2 3\n");
    CHECK(min_terminal_cut(edgeless).value == Rat(0));
}

TEST_CASE("brute force oracle frozen examples") {
    Graph path = Graph::parse_string("terminals a b\nedge a v 2\nedge v b 3\n");
    CHECK(brute_force_cut(path, 0b01) == Rat(2));

    Graph edge = Graph::parse_string("terminals a b\nedge a b 1\n");
    CHECK(brute_force_cut(edge, 0b01) == Rat(1));

    CHECK(brute_force_cut(k4(), 0b0011) == Rat(4));

    std::vector<std::string> terminals{"a", "b"};
    std::vector<std::tuple<std::string, std::string, Rat>> edges;
    for (int i = 0; i < 14; ++i)
        edges.emplace_back("x" + std::to_string(i), "a", Rat(1));
    Graph too_big(terminals, edges);
    CHECK_THROWS_AS(brute_force_cut(too_big, 0b01), ResourceLimit);
}

TEST_CASE("flow agrees with both oracles on random graphs") {
    Rng rng(20260809);
    for (int iter = 0; iter < 60; ++iter) {
        GraphParams params;
        params.vertices = rng.range(3, 10);
        params.terminals = rng.range(2, std::min(params.vertices, 6));
        params.extra_edges = rng.range(0, 10);
        params.connected = iter % 4 != 0;
        Graph g = random_graph(rng, params);
        Mask full = full_mask(g.terminal_count());
        for (Mask s = 1; s < full; ++s) {
            CutResult cut = terminal_cut(g, s);
            Rat oracle = brute_force_cut(g, s);
            REQUIRE(cut.value == oracle);
            // The returned cut must be a genuine separating cut of that value.
            Rat total(0);
            for (int e : cut.cut_edges) total += g.edges()[e].capacity;
            REQUIRE(total == cut.value);
        }
    }
}

TEST_CASE("complement symmetry and determinism") {
    Rng rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        GraphParams params;
        params.vertices = rng.range(4, 9);
        params.terminals = rng.range(3, 5);
        params.extra_edges = rng.range(2, 8);
        Graph g = random_graph(rng, params);
        Mask full = full_mask(g.terminal_count());
        for (Mask s = 1; s < full; ++s) {
            CutResult a = terminal_cut(g, s);
            CutResult b = terminal_cut(g, full ^ s);
            CHECK(a.value == b.value);
            CutResult again = terminal_cut(g, s);
            CHECK(a.source_side == again.source_side);
            CHECK(a.cut_edges == again.cut_edges);
        }
    }
}

TEST_CASE("combining realizations adds cut vectors") {
    Graph e1 = Graph::parse_string("terminals t1 t2\nedge t1 t2 1\n");
    Graph combined = combine_realizations(e1, e1, Rat(1), Rat(1));
    CHECK(cut_vector(combined).value(0b01) == Rat(2));

    CHECK_THROWS_AS(combine_realizations(e1, e1, Rat(2), Rat(0)), InvalidInput);

    Graph other = Graph::parse_string("terminals t1 t3\nedge t1 t3 1\n");
    CHECK_THROWS_AS(combine_realizations(e1, other, Rat(1), Rat(1)), InvalidInput);

    // Cone property against brute force on the merged graph.
    Graph k4g = Graph::parse_string(
        "terminals t1 t2 t3 t4\n"
        "edge t1 t2 1\nedge t1 t3 1\nedge t1 t4 1\nedge t2 t3 1\nedge t2 t4 1\nedge t3 t4 1\n");
    Graph star = Graph::parse_string(
        "terminals t1 t2 t3 t4\n"
        "edge t1 c 1\nedge t2 c 1\nedge t3 c 1\nedge t4 c 1\n");
    Graph sum = combine_realizations(k4g, star, Rat(1), Rat(1));
    TypeVector expect = tv_add(cut_vector(k4g), cut_vector(star));
    TypeVector got = cut_vector(sum);
    for (Mask s = 1; s < 15; ++s) {
        CHECK(got.value(s) == expect.value(s));
        CHECK(got.value(s) == brute_force_cut(sum, s));
    }

    // Steiner name collisions get renamed, not merged.
    Graph s2 = combine_realizations(star, star, Rat(2), Rat(3));
    CHECK(s2.vertex_count() == 6);
    TypeVector sv = cut_vector(s2);
    CHECK(sv.value(0b0001) == Rat(5));
}

TEST_CASE("cone property with rational weights on random pairs") {
    Rng rng(4242);
    for (int iter = 0; iter < 10; ++iter) {
        GraphParams params;
        params.vertices = rng.range(4, 7);
        params.terminals = 4;
        params.extra_edges = rng.range(1, 6);
        Graph g1 = random_graph(rng, params);
        Graph g2 = random_graph(rng, params);
        Rat a = rng.positive_rational(5, 3), b = rng.positive_rational(5, 3);
        Graph combined = combine_realizations(g1, g2, a, b);
        TypeVector expect = tv_add(tv_scale(cut_vector(g1), a), tv_scale(cut_vector(g2), b));
        TypeVector got = cut_vector(combined);
        for (Mask s = 1; s < 15; ++s) REQUIRE(got.value(s) == expect.value(s));
    }
}

TEST_CASE("submodularity of cut vectors") {
    Rng rng(5150);
    for (int iter = 0; iter < 12; ++iter) {
        GraphParams params;
        params.vertices = rng.range(4, 9);
        params.terminals = rng.range(3, 5);
        params.extra_edges = rng.range(2, 9);
        Graph g = random_graph(rng, params);
        TypeVector pi = cut_vector(g);
        Mask full = full_mask(g.terminal_count());
        for (Mask s = 1; s < full; ++s) {
            for (Mask s2 = s + 1; s2 < full; ++s2) {
                Mask inter = s & s2, uni = s | s2;
                if (inter == 0 || uni == full) continue;
                REQUIRE(pi.value(s) + pi.value(s2) >= pi.value(inter) + pi.value(uni));
            }
        }
    }
}
