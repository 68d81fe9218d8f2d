#include "termcut/subset.hpp"

#include <algorithm>
#include <bit>

namespace termcut {

int popcount(Mask s) { return std::popcount(s); }

std::vector<int> mask_indices(Mask s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1) {
        if (s & 1u) out.push_back(i);
    }
    return out;
}

bool canonical_less(Mask a, Mask b) {
    if (a == b) return false;
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    // Equal cardinality: the mask owning the lowest differing index has the
    // lexicographically smaller ascending index list.
    Mask diff = a ^ b;
    Mask lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

bool lex_less(Mask a, Mask b) {
    if (a == b) return false;
    Mask diff = a ^ b;
    Mask lowest = diff & (~diff + 1);
    if (a & lowest) {
        // a owns index i; b's list continues with something larger, or ends.
        // If b has no elements beyond the shared prefix, b is a strict prefix.
        Mask b_rest = b & ~(lowest - 1);
        return b_rest != 0;
    }
    Mask a_rest = a & ~(lowest - 1);
    return a_rest == 0;
}

std::vector<Mask> proper_subsets_canonical(int k) {
    std::vector<Mask> out;
    Mask full = full_mask(k);
    out.reserve(full > 1 ? full - 1 : 0);
    for (Mask s = 1; s < full; ++s) out.push_back(s);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace termcut
