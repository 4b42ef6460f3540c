#pragma once

// Test-only oracle: decide weak delta-colourability by enumerating all
// delta^v assignments. Independent of the solver's search path.

#include <algorithm>
#include <vector>

#include "kirkman/core.hpp"

namespace kirkman::test_oracle {

// enumerate all delta^v colourings, stopping at the first that satisfies
// the predicate
template <typename Pred>
inline bool naive_exists(const Design& d, int delta, Pred&& accept) {
    if (d.v == 0) return true;
    std::vector<int> col(d.v, 0);
    for (;;) {
        if (accept(col)) return true;
        int pos = 0;
        while (pos < d.v && col[pos] == delta - 1) col[pos++] = 0;
        if (pos == d.v) return false;
        ++col[pos];
    }
}

inline bool weak_under(const Design& d, const std::vector<int>& col) {
    for (const Block& b : d.blocks) {
        bool mono = true;
        for (std::size_t i = 1; i < b.size() && mono; ++i) mono = col[b[i]] == col[b[0]];
        if (mono) return false;
    }
    return true;
}

inline bool naive_weak_colourable(const Design& d, int delta) {
    return naive_exists(d, delta, [&](const std::vector<int>& col) {
        return weak_under(d, col);
    });
}

inline bool naive_equitable_colourable(const Design& d, int delta) {
    return naive_exists(d, delta, [&](const std::vector<int>& col) {
        if (!weak_under(d, col)) return false;
        std::vector<int> sizes(delta, 0);
        for (int c : col) ++sizes[c];
        auto [mn, mx] = std::minmax_element(sizes.begin(), sizes.end());
        return *mx - *mn <= 1;
    });
}

inline bool naive_type_colourable(const Design& d, int delta, std::vector<int> type) {
    std::sort(type.begin(), type.end());
    return naive_exists(d, delta, [&](const std::vector<int>& col) {
        if (!weak_under(d, col)) return false;
        std::vector<int> sizes(delta, 0);
        for (int c : col) ++sizes[c];
        std::vector<int> nonzero;
        for (int s : sizes)
            if (s > 0) nonzero.push_back(s);
        std::sort(nonzero.begin(), nonzero.end());
        return nonzero == type;
    });
}

}  // namespace kirkman::test_oracle
