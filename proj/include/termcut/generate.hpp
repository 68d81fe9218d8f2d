#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "termcut/graph.hpp"
#include "termcut/lp_cuts.hpp"
#include "termcut/typevec.hpp"

namespace termcut {

// Deterministic portable randomness: mt19937_64 is pinned by the standard,
// and all derived draws below use rejection sampling on its raw output, so
// the same seed yields the same bytes on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi], inclusive.
    int range(int lo, int hi);

    bool chance(int numerator, int denominator) {
        return below(static_cast<std::uint64_t>(denominator)) <
               static_cast<std::uint64_t>(numerator);
    }

    // Uniform p/q with 1 <= p <= max_numerator, 1 <= q <= max_denominator.
    Rat positive_rational(int max_numerator, int max_denominator);

   private:
    std::mt19937_64 engine_;
};

struct GraphParams {
    int vertices = 8;
    int terminals = 4;
    int extra_edges = 6;      // beyond the connecting spanning tree
    bool connected = true;    // when false, a spanning tree is not forced
    int max_numerator = 8;
    int max_denominator = 4;
};

// Terminals are named "t1".."tk", steiner vertices "v1"..; when connected,
// a random spanning tree is laid down first.
Graph random_graph(Rng& rng, const GraphParams& params);

// Random laminar-supported vector: sets drawn from a random recursive
// bipartition hierarchy, positive rational weights.
TypeVector random_laminar_gamma(Rng& rng, const std::vector<std::string>& terminals);

// beta with D_beta >= D_gamma: random support plus all singletons (so every
// pair is cut with positive weight), then scaled by the largest ratio
// D_gamma / D_beta over pairs with D_gamma > 0.
TypeVector dominating_beta(Rng& rng, const TypeVector& gamma);

// Arbitrary sparse nonnegative vector (not necessarily laminar).
TypeVector random_typevector(Rng& rng, const std::vector<std::string>& terminals,
                             int support_size);

SpanningTree random_tree(Rng& rng, const std::vector<std::string>& terminals,
                         const TerminalMetric& d);

}  // namespace termcut
