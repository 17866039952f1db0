#pragma once

// Index sets shared by the structural-law tests and the acceptance run.

#include "xop/indexsets.hpp"

#include <vector>

namespace corpus {

// Every F within {1, ..., top} with |F| <= max_k, the empty set first.
inline std::vector<xop::FSet> small_sets(int top = 6, int max_k = 3) {
    std::vector<xop::FSet> out;
    for (int mask = 0; mask < (1 << top); ++mask) {
        std::vector<int> e;
        for (int b = 0; b < top; ++b) {
            if (mask & (1 << b)) {
                e.push_back(b + 1);
            }
        }
        if (static_cast<int>(e.size()) <= max_k) {
            out.emplace_back(e);
        }
    }
    return out;
}

inline std::vector<xop::FPair> named_pairs() {
    using xop::FPair;
    using xop::FSet;
    return {
        FPair(FSet{}, FSet{}),     FPair(FSet{1}, FSet{}),  FPair(FSet{1, 2}, FSet{}),
        FPair(FSet{}, FSet{1}),    FPair(FSet{1}, FSet{1}), FPair(FSet{1, 2}, FSet{1}),
    };
}

} // namespace corpus
