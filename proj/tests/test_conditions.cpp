#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "termcut/conditions.hpp"
#include "termcut/error.hpp"
#include "termcut/generate.hpp"
#include "termcut/graph.hpp"

using namespace termcut;

namespace {

const std::vector<std::string> T4{"1", "2", "3", "4"};

Graph k4() {
    return Graph::parse_string(
        "terminals 1 2 3 4\n"
        "edge 1 2 1\nedge 1 3 1\nedge 1 4 1\nedge 2 3 1\nedge 2 4 1\nedge 3 4 1\n");
}

TypeVector all_ones(int k) {
    std::vector<std::string> terminals;
    for (int i = 1; i <= k; ++i) terminals.push_back(std::to_string(i));
    TypeVector pi(terminals);
    for (Mask s = 1; s < full_mask(k); ++s) pi.set(s, Rat(1));
    return pi;
}

// The six-terminal display: beta over four {1,2,x} triples plus {1,3,4}
// and {1,5,6}; gamma over the three sibling pairs with their singletons.
TypeVector six_beta(const std::vector<std::string>& terminals) {
    TypeVector beta(terminals);
    for (Mask s : {0b000111u, 0b001011u, 0b010011u, 0b100011u, 0b001101u, 0b110001u})
        beta.set(s, Rat(1));
    return beta;
}

TypeVector six_gamma(const std::vector<std::string>& terminals) {
    TypeVector gamma(terminals);
    for (Mask s : {0b000001u, 0b000010u, 0b000011u, 0b000100u, 0b001000u, 0b001100u,
                   0b010000u, 0b100000u, 0b110000u})
        gamma.set(s, Rat(1));
    return gamma;
}

}  // namespace

TEST_CASE("complement symmetry") {
    Rng rng(11);
    GraphParams params;
    Graph g = random_graph(rng, params);
    CHECK(check_complement_symmetry(cut_vector(g)).pass);

    TypeVector pi(T4);
    pi.set(0b0001, Rat(1));
    pi.set(0b1110, Rat(2));
    SymmetryResult r = check_complement_symmetry(pi);
    CHECK_FALSE(r.pass);
    // The witness re-evaluates to a genuine asymmetry.
    CHECK(pi.value(r.witness) != pi.value(full_mask(4) ^ r.witness));
    CHECK(r.value_set == pi.value(r.witness));

    TypeVector two({"a", "b"});
    two.set(0b01, Rat(7));
    two.set(0b10, Rat(7));
    CHECK(check_complement_symmetry(two).pass);
}

TEST_CASE("submodularity") {
    TypeVector k4pi = cut_vector(k4());
    CHECK(check_submodularity(k4pi).pass);
    CHECK(check_submodularity(all_ones(4)).pass);

    TypeVector pi(T4);
    pi.set(0b0011, Rat(1));  // {1,2}
    pi.set(0b0110, Rat(1));  // {2,3}
    pi.set(0b0010, Rat(3));  // {2}
    // {1,2,3} left at zero
    SubmodularityResult r = check_submodularity(pi);
    CHECK_FALSE(r.pass);
    CHECK(pi.value(r.s) + pi.value(r.s_prime) <
          pi.value(r.s & r.s_prime) + pi.value(r.s | r.s_prime));
    CHECK(r.lhs == pi.value(r.s) + pi.value(r.s_prime));
}

TEST_CASE("pair inequality on the section-4 displays") {
    {
        TypeVector pi = cut_vector(k4());
        TypeVector beta(T4), gamma(T4);
        for (Mask s : {0b0011u, 0b0101u, 0b1001u}) beta.set(s, Rat(1));
        for (int i = 0; i < 4; ++i) gamma.set(Mask{1} << i, Rat(1));
        PairInequalityResult r = check_pair_inequality(pi, beta, gamma);
        CHECK(r.status == PairStatus::Holds);
        CHECK(r.lhs == Rat(12));
        CHECK(r.rhs == Rat(12));
    }
    {
        Rng rng(606);
        std::vector<std::string> T6{"1", "2", "3", "4", "5", "6"};
        for (int iter = 0; iter < 10; ++iter) {
            GraphParams params;
            params.vertices = rng.range(6, 11);
            params.terminals = 6;
            params.extra_edges = rng.range(3, 14);
            Graph g = random_graph(rng, params);
            TypeVector pi = cut_vector(g).reordered(T6);
            PairInequalityResult r = check_pair_inequality(pi, six_beta(T6), six_gamma(T6));
            REQUIRE(r.status == PairStatus::Holds);
        }
    }
    {
        TypeVector pi = cut_vector(k4());
        TypeVector crossing(T4);
        crossing.set(0b0011, Rat(1));
        crossing.set(0b0110, Rat(1));
        CHECK(check_pair_inequality(pi, pi, crossing).status == PairStatus::NotLaminar);

        TypeVector tiny(T4), heavy(T4);
        tiny.set(0b0001, Rat(1, 100));
        for (int i = 0; i < 4; ++i) heavy.set(Mask{1} << i, Rat(10));
        PairInequalityResult r = check_pair_inequality(pi, tiny, heavy);
        CHECK(r.status == PairStatus::NotDominant);
        CHECK(r.dominance_witness.first >= 0);
    }
}

TEST_CASE("maximal laminar family enumeration") {
    std::vector<LaminarFamily> k3 = enumerate_maximal_laminar({"1", "2", "3"});
    CHECK(k3.size() == 3);

    std::vector<LaminarFamily> k4f = enumerate_maximal_laminar(T4);
    CHECK(k4f.size() == 15);
    std::set<std::vector<Mask>> distinct;
    for (const LaminarFamily& fam : k4f) {
        CHECK(is_laminar(fam.sets));
        CHECK(fam.sets.size() == 6);  // 2k - 2
        distinct.insert(fam.sets);
        // Maximal: every absent proper subset would cross something.
        std::set<Mask> members(fam.sets.begin(), fam.sets.end());
        for (Mask s = 1; s < full_mask(4); ++s) {
            if (members.count(s)) continue;
            std::vector<Mask> extended = fam.sets;
            extended.push_back(s);
            CHECK_FALSE(is_laminar(extended));
        }
    }
    CHECK(distinct.size() == 15);

    std::vector<std::string> eight;
    for (int i = 0; i < 8; ++i) eight.push_back(std::to_string(i));
    CHECK_THROWS_AS(enumerate_maximal_laminar(eight), ResourceLimit);
}

TEST_CASE("separation LP on realizable vectors") {
    Rng rng(303);
    for (int iter = 0; iter < 6; ++iter) {
        GraphParams params;
        params.vertices = rng.range(4, 8);
        params.terminals = 4;
        params.extra_edges = rng.range(2, 9);
        Graph g = random_graph(rng, params);
        TypeVector pi = cut_vector(g).reordered(T4);
        for (const LaminarFamily& fam : enumerate_maximal_laminar(T4)) {
            LaminarGap result = most_violated_laminar(pi, fam);
            REQUIRE(result.gap >= 0);
        }
    }
}

TEST_CASE("all-ones on four terminals violates a laminar inequality") {
    // <beta, pi> >= <gamma, pi> fails for beta = 1/4 on the three doubletons
    // containing terminal 1 and gamma = 1/4 on the singletons: both metrics
    // are uniform 1/2, yet 3/4 < 1. So all-ones is unrealizable and the
    // separation LP must find a negative gap.
    TypeVector pi = all_ones(4);
    bool found_negative = false;
    for (const LaminarFamily& fam : enumerate_maximal_laminar(T4)) {
        LaminarGap result = most_violated_laminar(pi, fam);
        if (result.gap < 0) {
            found_negative = true;
            // Witness soundness, re-evaluated from scratch.
            CHECK(is_laminar(result.gamma.support()));
            for (Mask s : result.gamma.support())
                CHECK(std::find(fam.sets.begin(), fam.sets.end(), s) != fam.sets.end());
            Rat total(0);
            for (const auto& [mask, value] : result.gamma.entries()) total += value;
            CHECK(total == Rat(1));
            CHECK(dominates(induced_metric(result.beta), induced_metric(result.gamma)));
            CHECK(weighted_cut(pi, result.beta) - weighted_cut(pi, result.gamma) ==
                  result.gap);
        }
    }
    CHECK(found_negative);
}

TEST_CASE("separation gap scales with pi") {
    Rng rng(404);
    TypeVector pi = random_typevector(rng, T4, 9);
    LaminarFamily fam = enumerate_maximal_laminar(T4)[4];
    LaminarGap base = most_violated_laminar(pi, fam);
    LaminarGap scaled = most_violated_laminar(tv_scale(pi, Rat(7, 3)), fam);
    CHECK(scaled.gap == Rat(7, 3) * base.gap);
}

TEST_CASE("gap is a true minimum over sampled feasible pairs") {
    Rng rng(515);
    TypeVector pi = random_typevector(rng, T4, 8);
    LaminarFamily fam = enumerate_maximal_laminar(T4)[0];
    LaminarGap best = most_violated_laminar(pi, fam);
    for (int iter = 0; iter < 20; ++iter) {
        TypeVector gamma(T4);
        for (Mask s : fam.sets)
            if (rng.chance(1, 2)) gamma.set(s, rng.positive_rational(4, 4));
        if (gamma.empty()) continue;
        Rat total(0);
        for (const auto& [mask, value] : gamma.entries()) total += value;
        gamma = tv_scale(gamma, 1 / total);  // normalize to sum 1
        TypeVector beta = dominating_beta(rng, gamma);
        REQUIRE(weighted_cut(pi, beta) - weighted_cut(pi, gamma) >= best.gap);
    }
}

TEST_CASE("full report") {
    Rng rng(616);
    GraphParams params;
    params.vertices = 6;
    params.terminals = 4;
    params.extra_edges = 6;
    Graph g = random_graph(rng, params);
    TypeVector pi = cut_vector(g);
    FullReport clean = full_report(pi);
    CHECK(clean.clean());
    CHECK(clean.sweep_ran);
    CHECK(clean.families_checked == 15);

    // A conic combination of realizations stays clean.
    Graph g2 = random_graph(rng, params);
    TypeVector combo =
        cut_vector(combine_realizations(g, g2, rng.positive_rational(3, 2),
                                        rng.positive_rational(3, 2)));
    CHECK(full_report(combo).clean());

    TypeVector asym(T4);
    asym.set(0b0001, Rat(1));
    asym.set(0b1110, Rat(2));
    FullReport bad = full_report(asym);
    CHECK_FALSE(bad.clean());
    CHECK_FALSE(bad.symmetry.pass);
    CHECK(bad.verdict() == "complement symmetry violated");

    FullReport ones = full_report(all_ones(4));
    CHECK_FALSE(ones.clean());
    CHECK(ones.violation.has_value());
    CHECK(ones.violation->gap < 0);
}

TEST_CASE("submodularity subsumed by laminar pairs") {
    Rng rng(717);
    for (int iter = 0; iter < 8; ++iter) {
        // Arbitrary vectors, realizable or not.
        TypeVector pi = iter % 2 == 0 ? random_typevector(rng, T4, rng.range(4, 12))
                                      : cut_vector(random_graph(rng, GraphParams{}));
        Mask full = full_mask(4);
        bool any_violation = false;
        for (Mask s = 1; s < full; ++s) {
            for (Mask s2 = s + 1; s2 < full; ++s2) {
                Mask inter = s & s2, uni = s | s2;
                if (inter == 0 || uni == full || inter == s || inter == s2) continue;
                TypeVector beta(pi.terminals()), gamma(pi.terminals());
                beta.add(s, Rat(1));
                beta.add(s2, Rat(1));
                gamma.add(inter, Rat(1));
                gamma.add(uni, Rat(1));
                PairInequalityResult mapped = check_pair_inequality(pi, beta, gamma);
                REQUIRE(mapped.status != PairStatus::NotLaminar);
                REQUIRE(mapped.status != PairStatus::NotDominant);
                bool submodular_here =
                    pi.value(s) + pi.value(s2) >= pi.value(inter) + pi.value(uni);
                REQUIRE((mapped.status == PairStatus::Holds) == submodular_here);
                if (!submodular_here) any_violation = true;
            }
        }
        // Any submodularity violation must also be caught by the LP sweep.
        if (any_violation) {
            FullReport report = full_report(pi);
            CHECK(report.violation.has_value());
        }
    }
}
