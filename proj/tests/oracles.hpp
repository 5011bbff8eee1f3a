#pragma once

// Brute-force reference answers used only by the tests. Deliberately naive:
// permutation and subset enumeration with no pruning shared with the
// library solvers.

#include <algorithm>
#include <numeric>
#include <vector>

#include "circum/graph.hpp"

namespace circum::oracle {

/// Longest cycle length by walking every vertex permutation, with the
/// degenerate lengths 1 (vertex) and 2 (edge).
inline int circumference(const Graph& g) {
    const int n = g.order();
    int best = g.edge_count() > 0 ? 2 : 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int k = 1; k < n; ++k) {
            if (!g.adjacent(perm[static_cast<std::size_t>(k - 1)], perm[static_cast<std::size_t>(k)])) break;
            if (k + 1 >= 3 && g.adjacent(perm[static_cast<std::size_t>(k)], perm[0])) best = std::max(best, k + 1);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline int longest_path(const Graph& g) {
    const int n = g.order();
    int best = 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int k = 1; k < n; ++k) {
            if (!g.adjacent(perm[static_cast<std::size_t>(k - 1)], perm[static_cast<std::size_t>(k)])) break;
            best = std::max(best, k);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool connected_without(const Graph& g, std::uint64_t removed) {
    const int n = g.order();
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed >> v) & 1U)) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int count = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int v = 0; v < n; ++v)
            if (!seen[static_cast<std::size_t>(v)] && !((removed >> v) & 1U) && g.adjacent(u, v)) {
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    return count == alive;
}

/// Smallest S with G \ S disconnected (|G \ S| >= 2), else n - 1.
inline int connectivity(const Graph& g) {
    const int n = g.order();
    int best = n - 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int size = __builtin_popcountll(s);
        if (size >= best || n - size < 2) continue;
        if (!connected_without(g, s)) best = size;
    }
    return best;
}

}  // namespace circum::oracle
