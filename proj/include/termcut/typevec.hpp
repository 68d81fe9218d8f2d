#pragma once

#include <map>
#include <string>
#include <vector>

#include "termcut/rational.hpp"
#include "termcut/subset.hpp"

namespace termcut {

// Nonnegative vector indexed by proper nonempty subsets of an ordered
// terminal set. Zero entries are dropped on construction, so the key set
// is exactly the support. Absent coordinates read as 0.
class TypeVector {
   public:
    explicit TypeVector(std::vector<std::string> terminals);

    // Adds value to the coordinate at `subset` (accumulating duplicates);
    // rejects subsets that are empty, full, or out of range, and negative
    // values. A resulting zero coordinate is removed.
    void add(Mask subset, const Rat& value);
    void set(Mask subset, const Rat& value);

    Rat value(Mask subset) const;
    bool has(Mask subset) const { return entries_.count(subset) != 0; }

    const std::map<Mask, Rat>& entries() const { return entries_; }
    std::vector<Mask> support() const;
    bool empty() const { return entries_.empty(); }

    const std::vector<std::string>& terminals() const { return terminals_; }
    int terminal_count() const { return static_cast<int>(terminals_.size()); }

    // Index of a terminal identifier, or -1.
    int terminal_index(const std::string& id) const;

    // Same entries re-expressed over a permutation of the same terminal set.
    TypeVector reordered(const std::vector<std::string>& new_terminals) const;

    bool operator==(const TypeVector& other) const {
        return terminals_ == other.terminals_ && entries_ == other.entries_;
    }

   private:
    std::vector<std::string> terminals_;
    std::map<Mask, Rat> entries_;
};

TypeVector tv_add(const TypeVector& a, const TypeVector& b);
TypeVector tv_scale(const TypeVector& v, const Rat& factor);

// Symmetric table of exact distances over terminal pairs, zero diagonal.
// Induced metrics satisfy the triangle inequality by construction; tables
// from external input go through `validated`.
class TerminalMetric {
   public:
    explicit TerminalMetric(std::vector<std::string> terminals);

    static TerminalMetric validated(std::vector<std::string> terminals,
                                    std::vector<Rat> upper_triangle);

    const Rat& at(int i, int j) const;
    void set(int i, int j, const Rat& value);

    const std::vector<std::string>& terminals() const { return terminals_; }
    int terminal_count() const { return static_cast<int>(terminals_.size()); }

    bool operator==(const TerminalMetric& other) const {
        return terminals_ == other.terminals_ && dist_ == other.dist_;
    }

   private:
    std::vector<std::string> terminals_;
    std::vector<Rat> dist_;  // row-major k*k, symmetric
};

struct LaminarFamily {
    std::vector<std::string> terminals;
    std::vector<Mask> sets;  // distinct proper nonempty, pairwise laminar
};

// D_v(t,t') = sum of v_S over member sets cutting the pair.
TerminalMetric induced_metric(const TypeVector& v);

// Entrywise d1 >= d2. Throws on mismatched terminal lists.
bool dominates(const TerminalMetric& d1, const TerminalMetric& d2);
// As above but reports the first violating pair through `witness`.
bool dominates(const TerminalMetric& d1, const TerminalMetric& d2,
               std::pair<int, int>* witness);

bool is_laminar(const std::vector<Mask>& sets);

// <v, pi> = sum over supp(v) of v_S * pi_S. Terminal sets must match.
Rat weighted_cut(const TypeVector& pi, const TypeVector& v);

}  // namespace termcut
