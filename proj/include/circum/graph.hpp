#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circum {

using Mask = std::uint64_t;

/// Largest order for which single-word adjacency masks are available.
inline constexpr int kMaskBits = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<int> mask_members(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        out.push_back(lowest_bit(m));
        m &= m - 1;
    }
    return out;
}

/// Subset of the vertices of one graph. Backed by a multi-word bitset so it
/// works for any order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}
    VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
        for (int v : members) insert(v);
    }
    template <class Range>
    static VertexSet of(int n, const Range& members) {
        VertexSet s(n);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    void insert(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) / 64] |= Mask{1} << (v % 64);
    }
    void erase(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) / 64] &= ~(Mask{1} << (v % 64));
    }
    bool contains(int v) const {
        if (v < 0 || v >= n_) return false;
        return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    }
    int size() const {
        int s = 0;
        for (Mask w : words_) s += popcount(w);
        return s;
    }
    bool empty() const { return size() == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    /// Only meaningful when universe() <= 64.
    Mask mask() const { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside vertex set universe");
    }

    int n_ = 0;
    std::vector<Mask> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as symmetric
/// bit rows. Rows are one word wide when n <= 64; larger graphs use
/// multi-word rows and the word-parallel mask accessors become unavailable.
class Graph {
public:
    using Edge = std::pair<int, int>;

    static Graph from_edge_list(int n, std::span<const Edge> edges) {
        if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") has a vertex out of range");
            if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
            g.set(u, v);
            g.set(v, u);
        }
        return g;
    }
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static Graph from_edge_list(int n, const std::vector<Edge>& edges) {
        return from_edge_list(n, std::span<const Edge>(edges));
    }

    int order() const { return n_; }
    bool fits_mask() const { return n_ <= kMaskBits; }

    bool adjacent(int u, int v) const {
        return (rows_[index(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    }

    std::span<const Mask> row(int u) const { return {rows_.data() + index(u), static_cast<std::size_t>(words_)}; }

    /// Neighbourhood of u as a single word. Requires order() <= 64.
    Mask mask(int u) const {
        if (!fits_mask()) throw std::logic_error("Graph::mask requires order <= 64");
        return rows_[static_cast<std::size_t>(u)];
    }
    Mask all_mask() const {
        if (!fits_mask()) throw std::logic_error("Graph::all_mask requires order <= 64");
        return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    }

    int degree(int u) const {
        int d = 0;
        for (Mask w : row(u)) d += popcount(w);
        return d;
    }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v)) out.push_back(v);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (Mask w : rows_) twice += static_cast<std::size_t>(popcount(w));
        return twice / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool is_complete() const { return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(int n)
        : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0) {}

    std::size_t index(int u) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(words_); }
    void set(int u, int v) { rows_[index(u) + static_cast<std::size_t>(v) / 64] |= Mask{1} << (v % 64); }

    int n_ = 0;
    int words_ = 0;
    std::vector<Mask> rows_;
};

inline Graph complete_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

inline Graph edgeless_graph(int n) { return Graph::from_edge_list(n, std::vector<Graph::Edge>{}); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edge_list(a.order() + b.order(), e);
}

inline Graph join(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) e.emplace_back(u, v + a.order());
    return Graph::from_edge_list(a.order() + b.order(), e);
}

/// Induced subgraph together with the map from new to old vertex indices.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_index;  // new -> old
    std::vector<int> new_index;  // old -> new, -1 when deleted
};

/// G \ S. Returns nullopt when S covers every vertex (the empty remainder).
inline std::optional<InducedSubgraph> delete_vertices(const Graph& g, const VertexSet& s) {
    std::vector<int> keep;
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
        keep.push_back(v);
    }
    if (keep.empty()) return std::nullopt;
    std::vector<Graph::Edge> e;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return InducedSubgraph{Graph::from_edge_list(static_cast<int>(keep.size()), e), std::move(keep),
                           std::move(new_index)};
}

inline std::optional<InducedSubgraph> induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    VertexSet drop(g.order());
    for (int v = 0; v < g.order(); ++v) drop.insert(v);
    for (int v : vertices) drop.erase(v);
    return delete_vertices(g, drop);
}

/// Connected components, each as a sorted vertex list, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (int v : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Vertices of the component of G[within] containing `from` (n <= 64).
inline Mask reach(const Graph& g, int from, Mask within) {
    Mask seen = bit(from) & within;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= g.mask(lowest_bit(f));
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace circum
