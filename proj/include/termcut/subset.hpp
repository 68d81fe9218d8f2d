#pragma once

#include <cstdint>
#include <vector>

namespace termcut {

// A subset of the ordered terminal list, bit i = terminal at position i.
// Terminal counts are capped well below 32 by the enumeration limits.
using Mask = std::uint32_t;

// Largest terminal count for which full subset enumeration is attempted.
inline constexpr int kEnumerationLimit = 12;

inline Mask full_mask(int k) { return (Mask{1} << k) - 1; }

int popcount(Mask s);

inline bool contains(Mask s, int i) { return (s >> i) & 1u; }

// S cuts {i, j} iff exactly one of the two terminals lies in S.
inline bool cuts_pair(Mask s, int i, int j) { return contains(s, i) != contains(s, j); }

// Nested or disjoint.
inline bool laminar_pair(Mask a, Mask b) {
    Mask inter = a & b;
    return inter == 0 || inter == a || inter == b;
}

std::vector<int> mask_indices(Mask s);

// Canonical subset order: nondecreasing cardinality, ties broken by the
// ascending index list compared lexicographically.
bool canonical_less(Mask a, Mask b);

// Pure lexicographic order on ascending index lists (a prefix sorts first).
bool lex_less(Mask a, Mask b);

// All proper nonempty subsets of a k-terminal set in canonical order.
std::vector<Mask> proper_subsets_canonical(int k);

}  // namespace termcut
