#pragma once

// Exact invariants: minimum degree, vertex connectivity, circumference,
// longest path and the residual invariants of G \ C.
//
// Length conventions: a lone vertex is a cycle of length 1 and an edge a
// cycle of length 2; a path's length is its edge count and the empty path
// has length -1.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"

namespace circum {

enum class CycleKind { vertex, edge, proper };

struct CycleWitness {
    CycleKind kind = CycleKind::vertex;
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

struct PathWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool empty() const { return vertices.empty(); }

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

inline CycleWitness make_cycle(std::vector<int> vertices) {
    CycleWitness c;
    c.kind = vertices.size() == 1 ? CycleKind::vertex : vertices.size() == 2 ? CycleKind::edge : CycleKind::proper;
    c.vertices = std::move(vertices);
    return c;
}

// Validators are independent of the solvers that produce witnesses.

inline bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
    const auto& vs = c.vertices;
    for (int v : vs)
        if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) return false;
    switch (c.kind) {
        case CycleKind::vertex:
            return vs.size() == 1;
        case CycleKind::edge:
            return vs.size() == 2 && g.adjacent(vs[0], vs[1]);
        case CycleKind::proper:
            if (vs.size() < 3) return false;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
            return true;
    }
    return false;
}

inline bool is_valid_path(const Graph& g, const PathWitness& p) {
    const auto& vs = p.vertices;
    for (int v : vs)
        if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) return false;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.adjacent(vs[i], vs[i + 1])) return false;
    return true;
}

inline int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

namespace detail {

/// Unit-capacity max flow on the vertex-split digraph; counts internally
/// vertex-disjoint s-t paths. Stops early once `limit` paths are found.
inline int local_connectivity(const Graph& g, int s, int t, int limit) {
    const int n = g.order();
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> net(static_cast<std::size_t>(2 * n));
    auto add = [&](int a, int b, int cap) {
        net[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(net[static_cast<std::size_t>(b)].size())});
        net[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(net[static_cast<std::size_t>(a)].size()) - 1});
    };
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (auto [u, v] : g.edges()) {
        add(2 * u + 1, 2 * v, inf);
        add(2 * v + 1, 2 * u, inf);
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(2 * n));
    while (flow < limit) {
        std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
        parent[static_cast<std::size_t>(source)] = {source, -1};
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent[static_cast<std::size_t>(sink)].first < 0) {
            int a = q.front();
            q.pop();
            const auto& arcs = net[static_cast<std::size_t>(a)];
            for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
                const Arc& arc = arcs[static_cast<std::size_t>(i)];
                if (arc.cap > 0 && parent[static_cast<std::size_t>(arc.to)].first < 0) {
                    parent[static_cast<std::size_t>(arc.to)] = {a, i};
                    q.push(arc.to);
                }
            }
        }
        if (parent[static_cast<std::size_t>(sink)].first < 0) break;
        for (int v = sink; v != source;) {
            auto [a, i] = parent[static_cast<std::size_t>(v)];
            Arc& arc = net[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            arc.cap -= 1;
            net[static_cast<std::size_t>(v)][static_cast<std::size_t>(arc.rev)].cap += 1;
            v = a;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

/// Minimum vertex cut size; n-1 for complete graphs, 0 when disconnected.
/// Local connectivities are only needed from the first kappa+1 vertices:
/// some vertex among them survives a minimum cut.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 1) return 0;
    if (!is_connected(g)) return 0;
    if (g.is_complete()) return n - 1;
    int best = min_degree(g);
    for (int i = 0; i <= best && i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i || g.adjacent(i, j)) continue;
            best = std::min(best, detail::local_connectivity(g, i, j, best));
        }
    }
    return best;
}

/// Optional wall-clock limit for the exponential solvers.
struct SearchBudget {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SearchBudget unlimited() { return {}; }
    static SearchBudget seconds(double s) {
        SearchBudget b;
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(s));
        return b;
    }
    bool expired() const { return deadline && std::chrono::steady_clock::now() >= *deadline; }
};

struct CycleResult {
    CycleWitness cycle;
    bool complete = true;  // false when the budget ran out; cycle is then a lower bound
    int length() const { return cycle.length(); }
};

struct PathResult {
    PathWitness path;
    bool complete = true;
    int length() const { return path.length(); }
};

namespace detail {

/// Twin classes of G[within]: true twins (equal closed neighbourhoods) or,
/// failing that, false twins (equal open neighbourhoods). Transposing two
/// twins is an automorphism, so searches may use class members in index
/// order. Returns, per vertex, the members of its class below it.
inline std::vector<Mask> lower_twins(const Graph& g, Mask within) {
    std::vector<Mask> lower(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> members = mask_members(within);
    std::vector<bool> grouped(static_cast<std::size_t>(g.order()), false);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int u = members[i];
            if (grouped[static_cast<std::size_t>(u)]) continue;
            const Mask nu = (g.mask(u) & within) | (pass == 0 ? bit(u) : 0);
            Mask cls = bit(u);
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const int v = members[j];
                if (grouped[static_cast<std::size_t>(v)]) continue;
                const Mask nv = (g.mask(v) & within) | (pass == 0 ? bit(v) : 0);
                if (nu == nv) cls |= bit(v);
            }
            if (popcount(cls) < 2) continue;
            for (int v : mask_members(cls)) {
                grouped[static_cast<std::size_t>(v)] = true;
                lower[static_cast<std::size_t>(v)] = cls & (bit(v) - 1);
            }
        }
    }
    return lower;
}

/// Vertex sets of the biconnected components with at least three vertices.
inline std::vector<Mask> cyclic_blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<Mask> blocks;
    int timer = 0;
    auto dfs = [&](auto&& self, int u, int parent) -> void {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        for (Mask m = g.mask(u); m; m &= m - 1) {
            const int v = lowest_bit(m);
            if (v == parent) continue;
            if (disc[static_cast<std::size_t>(v)] < 0) {
                edge_stack.emplace_back(u, v);
                self(self, v, u);
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    Mask block = 0;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block |= bit(a) | bit(b);
                        if (a == u && b == v) break;
                    }
                    if (popcount(block) >= 3) blocks.push_back(block);
                }
            } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[static_cast<std::size_t>(s)] < 0) dfs(dfs, s, -1);
    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
        return a < b;
    });
    return blocks;
}

struct StateKey {
    Mask visited;
    int end;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::uint64_t h = k.visited * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(k.end) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

inline constexpr std::size_t kMemoCap = std::size_t{1} << 20;

/// Depth-first search over simple paths shared by the cycle and path solvers.
/// A state (visited set, endpoint) fully determines the possible
/// continuations, so revisited states are skipped; the incumbent only grows,
/// so a state pruned once stays pruned.
class PathSearch {
public:
    PathSearch(const Graph& g, Mask allowed, const SearchBudget& budget)
        : g_(g), allowed_(allowed), budget_(budget), lower_(lower_twins(g, allowed)) {}

    bool aborted() const { return aborted_; }

    /// Longest cycle inside `allowed` with at least `incumbent + 1` vertices;
    /// `best` is updated in place.
    void cycles(int& best_len, std::vector<int>& best) {
        Mask remaining = allowed_;
        std::vector<Mask> classes = twin_classes();
        for (Mask cls : classes) {
            if (popcount(remaining) <= best_len || aborted_) break;
            const int s = lowest_bit(cls);
            memo_.clear();
            start_ = s;
            path_.assign(1, s);
            allowed_now_ = remaining;
            cycle_dfs(bit(s), s, best_len, best);
            remaining &= ~cls;
        }
    }

    /// Longest path inside `allowed` with more than `best_len` edges.
    void paths(int& best_len, std::vector<int>& best) {
        memo_.clear();
        allowed_now_ = allowed_;
        for (int s : mask_members(allowed_)) {
            if (lower_[static_cast<std::size_t>(s)] != 0) continue;
            if (aborted_ || best_len >= popcount(allowed_) - 1) break;
            start_ = s;
            path_.assign(1, s);
            path_dfs(bit(s), s, best_len, best);
        }
    }

private:
    std::vector<Mask> twin_classes() const {
        std::vector<Mask> out;
        Mask seen = 0;
        for (int v : mask_members(allowed_)) {
            if (seen & bit(v)) continue;
            Mask cls = bit(v);
            for (int w : mask_members(allowed_ & ~seen))
                if (w > v && (lower_[static_cast<std::size_t>(w)] & bit(v))) cls |= bit(w);
            seen |= cls;
            out.push_back(cls);
        }
        return out;
    }

    bool tick() {
        if ((++nodes_ & 1023) == 0 && budget_.expired()) aborted_ = true;
        return !aborted_;
    }

    bool admissible(int w, Mask visited) const { return (lower_[static_cast<std::size_t>(w)] & ~visited) == 0; }

    bool seen_before(Mask visited, int end) {
        StateKey key{visited, end};
        if (memo_.count(key)) return true;
        if (memo_.size() < kMemoCap) memo_.insert(key);
        return false;
    }

    void cycle_dfs(Mask visited, int end, int& best_len, std::vector<int>& best) {
        if (!tick()) return;
        const int len = popcount(visited);
        if (len >= 3 && len > best_len && g_.adjacent(end, start_)) {
            best_len = len;
            best = path_;
        }
        const Mask free = allowed_now_ & ~visited;
        // The rest of the cycle runs end -> (one component of G[free]) -> start.
        Mask useful = 0;
        int bound = len;
        for (Mask rest = free & g_.mask(end); rest;) {
            const Mask comp = reach(g_, lowest_bit(rest), free);
            rest &= ~comp;
            if (!(comp & g_.mask(start_))) continue;
            bound = std::max(bound, len + popcount(comp));
            if (len + popcount(comp) > best_len) useful |= comp;
        }
        if (bound <= best_len || useful == 0) return;
        if (seen_before(visited, end)) return;
        for (Mask cand = g_.mask(end) & useful; cand; cand &= cand - 1) {
            const int w = lowest_bit(cand);
            if (!admissible(w, visited)) continue;
            path_.push_back(w);
            cycle_dfs(visited | bit(w), w, best_len, best);
            path_.pop_back();
            if (aborted_ || best_len == popcount(allowed_now_)) return;
        }
    }

    void path_dfs(Mask visited, int end, int& best_len, std::vector<int>& best) {
        if (!tick()) return;
        const int len = popcount(visited) - 1;
        if (len > best_len) {
            best_len = len;
            best = path_;
        }
        const Mask free = allowed_now_ & ~visited;
        Mask useful = 0;
        for (Mask rest = free & g_.mask(end); rest;) {
            const Mask comp = reach(g_, lowest_bit(rest), free);
            rest &= ~comp;
            if (len + popcount(comp) > best_len) useful |= comp;
        }
        if (useful == 0) return;
        if (seen_before(visited, end)) return;
        for (Mask cand = g_.mask(end) & useful; cand; cand &= cand - 1) {
            const int w = lowest_bit(cand);
            if (!admissible(w, visited)) continue;
            path_.push_back(w);
            path_dfs(visited | bit(w), w, best_len, best);
            path_.pop_back();
            if (aborted_ || best_len == popcount(allowed_now_) - 1) return;
        }
    }

    const Graph& g_;
    Mask allowed_;
    Mask allowed_now_ = 0;
    const SearchBudget& budget_;
    std::vector<Mask> lower_;
    std::unordered_set<StateKey, StateKeyHash> memo_;
    std::vector<int> path_;
    int start_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

/// Greedy incumbent: grow a path by fewest-onward-neighbours and close it
/// back to the earliest adjacent path vertex.
inline void greedy_cycle(const Graph& g, Mask allowed, int& best_len, std::vector<int>& best) {
    for (int s : mask_members(allowed)) {
        std::vector<int> path{s};
        std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
        pos[static_cast<std::size_t>(s)] = 0;
        Mask visited = bit(s);
        while (true) {
            const int end = path.back();
            for (Mask back = g.mask(end) & visited; back; back &= back - 1) {
                const int p = pos[static_cast<std::size_t>(lowest_bit(back))];
                const int len = static_cast<int>(path.size()) - p;
                if (len >= 3 && len > best_len) {
                    best_len = len;
                    best.assign(path.begin() + p, path.end());
                }
            }
            const Mask cand = g.mask(end) & allowed & ~visited;
            if (!cand) break;
            int pick = -1;
            int pick_deg = std::numeric_limits<int>::max();
            for (Mask c = cand; c; c &= c - 1) {
                const int w = lowest_bit(c);
                const int d = popcount(g.mask(w) & allowed & ~visited);
                if (d < pick_deg) {
                    pick = w;
                    pick_deg = d;
                }
            }
            pos[static_cast<std::size_t>(pick)] = static_cast<int>(path.size());
            path.push_back(pick);
            visited |= bit(pick);
        }
    }
}

inline void greedy_path(const Graph& g, Mask allowed, int& best_len, std::vector<int>& best) {
    for (int s : mask_members(allowed)) {
        std::vector<int> path{s};
        Mask visited = bit(s);
        while (true) {
            const Mask cand = g.mask(path.back()) & allowed & ~visited;
            if (!cand) break;
            int pick = -1;
            int pick_deg = std::numeric_limits<int>::max();
            for (Mask c = cand; c; c &= c - 1) {
                const int w = lowest_bit(c);
                const int d = popcount(g.mask(w) & allowed & ~visited);
                if (d < pick_deg) {
                    pick = w;
                    pick_deg = d;
                }
            }
            path.push_back(pick);
            visited |= bit(pick);
        }
        if (static_cast<int>(path.size()) - 1 > best_len) {
            best_len = static_cast<int>(path.size()) - 1;
            best = path;
        }
    }
}

inline void require_mask_order(const Graph& g, const char* what) {
    if (!g.fits_mask()) throw CapExceeded(std::string(what) + ": graph order exceeds 64");
}

}  // namespace detail

/// Circumference with a witness. Degenerate answers: a vertex (length 1)
/// for edgeless graphs, an edge (length 2) for forests.
inline CycleResult longest_cycle(const Graph& g, const SearchBudget& budget = {}) {
    detail::require_mask_order(g, "longest_cycle");
    CycleResult result;
    result.cycle = make_cycle({0});
    for (auto [u, v] : g.edges()) {
        result.cycle = make_cycle({u, v});
        break;
    }
    int best_len = result.cycle.length();
    std::vector<int> best;
    for (Mask block : detail::cyclic_blocks(g)) {
        if (popcount(block) <= best_len) continue;
        detail::greedy_cycle(g, block, best_len, best);
        detail::PathSearch search(g, block, budget);
        search.cycles(best_len, best);
        if (search.aborted()) result.complete = false;
    }
    if (!best.empty()) result.cycle = make_cycle(best);
    return result;
}

/// Longest path (edge count) with a witness; 0 for a single vertex.
inline PathResult longest_path(const Graph& g, const SearchBudget& budget = {}) {
    detail::require_mask_order(g, "longest_path");
    PathResult result;
    int best_len = 0;
    std::vector<int> best{0};
    auto comps = components(g);
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) - 1 <= best_len) continue;
        Mask m = 0;
        for (int v : comp) m |= bit(v);
        detail::greedy_path(g, m, best_len, best);
        detail::PathSearch search(g, m, budget);
        search.paths(best_len, best);
        if (search.aborted()) result.complete = false;
    }
    result.path.vertices = best;
    return result;
}

struct ResidualInvariants {
    bool residual_empty = false;
    std::optional<int> cbar;  // undefined when G \ C is empty
    int pbar = -1;
    CycleWitness residual_cycle;  // in the original graph's labels
    PathWitness residual_path;
    bool complete = true;
};

inline ResidualInvariants residual_invariants(const Graph& g, const CycleWitness& c, const SearchBudget& budget = {}) {
    ResidualInvariants out;
    auto rest = delete_vertices(g, VertexSet::of(g.order(), c.vertices));
    if (!rest) {
        out.residual_empty = true;
        return out;
    }
    auto cyc = longest_cycle(rest->graph, budget);
    auto path = longest_path(rest->graph, budget);
    for (int& v : cyc.cycle.vertices) v = rest->old_index[static_cast<std::size_t>(v)];
    for (int& v : path.path.vertices) v = rest->old_index[static_cast<std::size_t>(v)];
    out.cbar = cyc.length();
    out.pbar = path.length();
    out.residual_cycle = std::move(cyc.cycle);
    out.residual_path = std::move(path.path);
    out.complete = cyc.complete && path.complete;
    return out;
}

inline bool is_dominating_cycle(const Graph& g, const CycleWitness& c) {
    auto rest = delete_vertices(g, VertexSet::of(g.order(), c.vertices));
    return !rest || rest->graph.edge_count() == 0;
}

inline constexpr int kExhaustiveCap = 12;

/// Every longest cycle, each proper cycle once up to rotation and
/// reflection (listed from its smallest vertex, second vertex smaller than
/// the last). Degenerate circumference lists all vertices or all edges.
inline std::vector<CycleWitness> all_longest_cycles(const Graph& g, int cap = kExhaustiveCap) {
    if (g.order() > cap) throw CapExceeded("all_longest_cycles: order above exhaustive cap");
    const int c = longest_cycle(g).length();
    std::vector<CycleWitness> out;
    if (c == 1) {
        for (int v = 0; v < g.order(); ++v) out.push_back(make_cycle({v}));
        return out;
    }
    if (c == 2) {
        for (auto [u, v] : g.edges()) out.push_back(make_cycle({u, v}));
        return out;
    }
    std::vector<int> path;
    auto dfs = [&](auto&& self, int s, int end, Mask visited) -> void {
        if (static_cast<int>(path.size()) == c) {
            if (g.adjacent(end, s) && path[1] < path.back()) out.push_back(make_cycle(path));
            return;
        }
        for (Mask cand = g.mask(end) & ~visited & ~(bit(s + 1) - 1); cand; cand &= cand - 1) {
            const int w = lowest_bit(cand);
            path.push_back(w);
            self(self, s, w, visited | bit(w));
            path.pop_back();
        }
    };
    for (int s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        dfs(dfs, s, s, bit(s));
    }
    return out;
}

/// The profile of one graph against one longest-cycle witness.
struct InvariantProfile {
    int n = 0;
    int delta = 0;
    int kappa = 0;
    int c = 0;
    CycleWitness cycle;
    bool residual_empty = false;
    std::optional<int> cbar;
    int pbar = -1;
    CycleWitness residual_cycle;
    PathWitness residual_path;
    bool complete = true;  // false if any solver hit its time budget
};

inline InvariantProfile compute_profile(const Graph& g, const SearchBudget& budget = {}) {
    InvariantProfile p;
    p.n = g.order();
    p.delta = min_degree(g);
    p.kappa = vertex_connectivity(g);
    auto cyc = longest_cycle(g, budget);
    p.c = cyc.length();
    p.cycle = cyc.cycle;
    auto res = residual_invariants(g, p.cycle, budget);
    p.residual_empty = res.residual_empty;
    p.cbar = res.cbar;
    p.pbar = res.pbar;
    p.residual_cycle = std::move(res.residual_cycle);
    p.residual_path = std::move(res.residual_path);
    p.complete = cyc.complete && res.complete;
    return p;
}

}  // namespace circum
