#pragma once

// Path systems hanging off a longest cycle H of G \ C, and the per-vertex
// bookkeeping built on them.
//
// Segment sizes follow the vertex-count convention: |T(u)| - 1 is the number
// of edges of T(u), |x H y| - 1 the number of edges from x forward to y.

#include <algorithm>
#include <array>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"
#include "circum/invariants.hpp"
#include "circum/rational.hpp"

namespace circum {

inline constexpr int kMachineryCap = 12;

struct HcExtension {
    Graph graph;
    CycleWitness cycle;                // C
    std::vector<int> h;                // u_1 .. u_h in cyclic order
    std::vector<std::vector<int>> t;   // t[i] = T(u_i), starts at u_i, ends at its terminal

    // derived by finalize()
    std::vector<int> owner;  // vertex -> index i with vertex on T(u_i), else -1
    std::vector<int> h_index;  // vertex -> index on H, else -1
    Mask on_c = 0;
    Mask on_t = 0;
    Mask on_h = 0;

    int size() const { return static_cast<int>(h.size()); }
    int next(int i) const { return (i + 1) % size(); }
    int prev(int i) const { return (i + size() - 1) % size(); }
    int hat(int i) const { return t[static_cast<std::size_t>(i)].back(); }
    /// Successor of u_i on T(u_i); undefined for trivial paths.
    std::optional<int> ring(int i) const {
        const auto& p = t[static_cast<std::size_t>(i)];
        if (p.size() < 2) return std::nullopt;
        return p[1];
    }
    int tlen(int i) const { return static_cast<int>(t[static_cast<std::size_t>(i)].size()) - 1; }
    Mask t_mask(int i) const {
        Mask m = 0;
        for (int v : t[static_cast<std::size_t>(i)]) m |= bit(v);
        return m;
    }
    int nontrivial() const {
        int k = 0;
        for (int i = 0; i < size(); ++i) k += tlen(i) > 0;
        return k;
    }
    /// Edge count of the forward segment x H y (x, y given as H indices).
    int segment_len(int i, int j) const { return ((j - i) % size() + size()) % size(); }

    void finalize() {
        const int n = graph.order();
        owner.assign(static_cast<std::size_t>(n), -1);
        h_index.assign(static_cast<std::size_t>(n), -1);
        on_c = on_t = on_h = 0;
        for (int v : cycle.vertices) on_c |= bit(v);
        for (int i = 0; i < size(); ++i) {
            h_index[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])] = i;
            on_h |= bit(h[static_cast<std::size_t>(i)]);
            for (int v : t[static_cast<std::size_t>(i)]) {
                owner[static_cast<std::size_t>(v)] = i;
                on_t |= bit(v);
            }
        }
    }
};

namespace detail {

inline void require_machinery_graph(const Graph& g, int cap, const char* what) {
    if (g.order() > cap) throw CapExceeded(std::string(what) + ": order above cap " + std::to_string(cap));
}

/// C valid, H a proper cycle avoiding C.
inline void check_cycle_pair(const Graph& g, const CycleWitness& c, const std::vector<int>& h) {
    if (!g.fits_mask()) throw CapExceeded("extension machinery needs order <= 64");
    if (!is_valid_cycle(g, c)) throw PreconditionError("C is not a cycle of the graph");
    if (h.size() < 3) throw PreconditionError("H must be a proper cycle (length >= 3)");
    if (!is_valid_cycle(g, make_cycle(h))) throw PreconditionError("H is not a cycle of the graph");
    for (int v : h)
        if (std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end())
            throw PreconditionError("H meets C");
}

}  // namespace detail

/// Structural check: disjoint paths rooted at the u_i inside G \ C, each
/// terminal's neighbourhood inside V(T) and V(C). Returns an error message.
inline std::optional<std::string> extension_error(const HcExtension& e) {
    const Graph& g = e.graph;
    if (!is_valid_cycle(g, e.cycle)) return "C invalid";
    if (e.h.size() < 3 || !is_valid_cycle(g, make_cycle(e.h))) return "H is not a proper cycle";
    if (e.t.size() != e.h.size()) return "one path per vertex of H required";
    Mask c = 0;
    for (int v : e.cycle.vertices) c |= bit(v);
    Mask used = 0;
    for (std::size_t i = 0; i < e.t.size(); ++i) {
        const auto& p = e.t[i];
        if (p.empty() || p.front() != e.h[i]) return "T(u_" + std::to_string(i + 1) + ") does not start at u_i";
        if (!is_valid_path(g, PathWitness{p})) return "T(u_" + std::to_string(i + 1) + ") is not a path";
        for (int v : p) {
            if (c & bit(v)) return "T meets C";
            if (used & bit(v)) return "paths of T overlap";
            used |= bit(v);
        }
    }
    for (std::size_t i = 0; i < e.t.size(); ++i) {
        const int hat = e.t[i].back();
        if (g.mask(hat) & ~(used | c)) return "terminal of T(u_" + std::to_string(i + 1) + ") has a neighbour outside T and C";
    }
    return std::nullopt;
}

/// Also checks that C is longest in G and H longest in G \ C.
inline std::optional<std::string> extremal_error(const HcExtension& e) {
    if (auto err = extension_error(e)) return err;
    if (longest_cycle(e.graph).length() != e.cycle.length()) return "C is not a longest cycle";
    auto rest = delete_vertices(e.graph, VertexSet::of(e.graph.order(), e.cycle.vertices));
    if (!rest || longest_cycle(rest->graph).length() != static_cast<int>(e.h.size()))
        return "H is not a longest cycle of G \\ C";
    return std::nullopt;
}

inline HcExtension make_extension(const Graph& g, CycleWitness c, std::vector<int> h, std::vector<std::vector<int>> t) {
    detail::check_cycle_pair(g, c, h);
    HcExtension e{g, std::move(c), std::move(h), std::move(t), {}, {}, 0, 0, 0};
    if (auto err = extension_error(e)) throw PreconditionError("not an extension: " + *err);
    e.finalize();
    return e;
}

/// Grow each T(u_i) from u_i: while some terminal has a neighbour outside
/// V(T) and V(C), append the lowest such neighbour to the first offending path.
inline HcExtension greedy_hc_extension(const Graph& g, const CycleWitness& c, const std::vector<int>& h) {
    detail::check_cycle_pair(g, c, h);
    Mask blocked = 0;
    for (int v : c.vertices) blocked |= bit(v);
    std::vector<std::vector<int>> t;
    for (int u : h) {
        t.push_back({u});
        blocked |= bit(u);
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (auto& p : t) {
            Mask out = g.mask(p.back()) & ~blocked;
            if (!out) continue;
            const int w = lowest_bit(out);
            p.push_back(w);
            blocked |= bit(w);
            grew = true;
            break;
        }
    }
    return make_extension(g, c, h, std::move(t));
}

/// Exhaustive search for an extension with the most nontrivial paths; ties
/// go to the lexicographically smallest list of paths.
inline HcExtension maximal_hc_extension(const Graph& g, const CycleWitness& c, const std::vector<int>& h,
                                        int cap = kMachineryCap) {
    detail::require_machinery_graph(g, cap, "maximal_hc_extension");
    detail::check_cycle_pair(g, c, h);
    Mask cm = 0, hm = 0;
    for (int v : c.vertices) cm |= bit(v);
    for (int v : h) hm |= bit(v);
    const Mask free = g.all_mask() & ~cm & ~hm;
    const int hn = static_cast<int>(h.size());

    std::vector<std::vector<int>> cur(h.size()), best;
    int best_obj = -1;

    auto valid = [&](Mask used) {
        for (const auto& p : cur)
            if (g.mask(p.back()) & ~(used | cm)) return false;
        return true;
    };
    // Paths for root i are emitted prefix-first with ascending extensions, so
    // systems are visited in lexicographic order and the first best wins.
    auto roots = [&](auto&& self, int i, Mask used, int obj) -> void {
        if (obj + (hn - i) <= best_obj) return;
        if (i == hn) {
            if (valid(used)) {
                best_obj = obj;
                best = cur;
            }
            return;
        }
        auto& p = cur[static_cast<std::size_t>(i)];
        p.assign(1, h[static_cast<std::size_t>(i)]);
        auto grow = [&](auto&& grow_self, Mask u) -> void {
            self(self, i + 1, u, obj + (p.size() > 1 ? 1 : 0));
            for (Mask cand = g.mask(p.back()) & free & ~u; cand; cand &= cand - 1) {
                const int w = lowest_bit(cand);
                p.push_back(w);
                grow_self(grow_self, u | bit(w));
                p.pop_back();
            }
        };
        grow(grow, used);
    };
    roots(roots, 0, hm, 0);
    return make_extension(g, c, h, std::move(best));
}

// ---------------------------------------------------------------------------
// Theta

struct ThetaResult {
    enum class Stop { closed, reached_final };  // case (i) or case (ii)
    std::vector<std::vector<int>> paths;        // P_0 .. P_pi
    std::vector<Mask> chain;                    // X_0 .. X_{pi'} for the extending steps
    Stop stop = Stop::closed;

    int pi() const { return static_cast<int>(paths.size()) - 1; }
    const std::vector<int>& last() const { return paths.back(); }
};

namespace detail {

/// Lexicographically smallest path from s whose interior lies in `neut` and
/// whose last vertex lies in `targets`. A bare edge counts only if allowed.
inline std::optional<std::vector<int>> smallest_neut_path(const Graph& g, int s, Mask neut, Mask targets,
                                                          bool edges_count) {
    targets &= ~neut & ~bit(s);
    auto feeds = [&](int x, Mask used) {
        Mask comp = reach(g, x, (neut & ~used) | bit(x));
        for (Mask m = comp; m; m &= m - 1)
            if (g.mask(lowest_bit(m)) & targets) return true;
        return false;
    };
    std::vector<int> path{s};
    Mask used = bit(s);
    int cur = s;
    for (;;) {
        Mask options = 0;
        if (cur != s || edges_count) options |= g.mask(cur) & targets;
        for (Mask m = g.mask(cur) & neut & ~used; m; m &= m - 1) {
            const int x = lowest_bit(m);
            if (feeds(x, used | bit(x))) options |= bit(x);
        }
        if (!options) return std::nullopt;
        const int w = lowest_bit(options);
        path.push_back(w);
        if (targets & bit(w)) return path;
        used |= bit(w);
        cur = w;
    }
}

}  // namespace detail

inline ThetaResult theta_procedure(const Graph& g, const std::vector<int>& p, Mask neut, Mask fin,
                                   bool edges_count = true) {
    if (!g.fits_mask()) throw CapExceeded("theta_procedure needs order <= 64");
    if (p.size() < 2 || !is_valid_path(g, PathWitness{p})) throw PreconditionError("theta needs a path of length >= 1");
    Mask pm = 0;
    for (int v : p) pm |= bit(v);
    if ((neut & fin) || (neut & pm) || (fin & pm)) throw PreconditionError("theta: vertex sets must be disjoint");
    if ((neut | fin) & ~g.all_mask()) throw PreconditionError("theta: vertex out of range");

    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);

    ThetaResult r;
    r.paths.push_back({p[0], p[1]});
    int z = 1;  // index of z_{i-1} on P
    Mask x = bit(p[0]) | bit(p[1]);
    r.chain.push_back(x);
    for (;;) {
        const Mask starts = x & ~bit(p[static_cast<std::size_t>(z)]);
        // (ii)
        std::optional<std::vector<int>> hit;
        for (Mask s = starts; s && !hit; s &= s - 1) hit = detail::smallest_neut_path(g, lowest_bit(s), neut, fin, edges_count);
        if (hit) {
            r.paths.push_back(*hit);
            r.stop = ThetaResult::Stop::reached_final;
            return r;
        }
        // (iii): furthest reachable vertex beyond z, then the smallest path to it.
        Mask beyond = 0;
        for (std::size_t i = static_cast<std::size_t>(z) + 1; i < p.size(); ++i) beyond |= bit(p[i]);
        int far = -1;
        for (Mask s = starts; s; s &= s - 1) {
            const int sv = lowest_bit(s);
            for (Mask b = beyond; b; b &= b - 1) {
                const int tv = lowest_bit(b);
                if (pos[static_cast<std::size_t>(tv)] <= far) continue;
                if (detail::smallest_neut_path(g, sv, neut, bit(tv), edges_count)) far = pos[static_cast<std::size_t>(tv)];
            }
        }
        if (far < 0) {
            r.stop = ThetaResult::Stop::closed;
            return r;
        }
        const int target = p[static_cast<std::size_t>(far)];
        for (Mask s = starts; s; s &= s - 1) {
            if (auto q = detail::smallest_neut_path(g, lowest_bit(s), neut, bit(target), edges_count)) {
                r.paths.push_back(*q);
                break;
            }
        }
        z = far;
        for (int i = 0; i <= z; ++i) x |= bit(p[static_cast<std::size_t>(i)]);
        r.chain.push_back(x);
    }
}

// ---------------------------------------------------------------------------
// Classification and statistics

enum class UClass { u0, u1, u2, special };

inline const char* to_string(UClass c) {
    switch (c) {
        case UClass::u0: return "U0";
        case UClass::u1: return "U1";
        case UClass::u2: return "U2";
        case UClass::special: return "U*";
    }
    return "?";
}

struct ExtensionStats {
    // indexed by position on H; vertex sets are masks of vertex ids
    std::vector<Mask> Phi, Psi, B, Bstar, Lambda;
    std::vector<int> phi, psi, b, bstar, phi_prime, gamma;
    std::vector<UClass> cls;
    std::vector<std::optional<ThetaResult>> theta;
    std::vector<std::vector<Mask>> A;       // A[u][v]
    std::vector<std::vector<int>> rho;      // -1 when A[u][v] is empty
    std::vector<std::vector<int>> rho_bar;  // -1 when A[u][v] is empty
    std::vector<Rational> beta;
    Rational mu;
};

inline ExtensionStats compute_stats(const HcExtension& e, bool edges_count = true) {
    const Graph& g = e.graph;
    const int hn = e.size();
    const auto sz = static_cast<std::size_t>(hn);
    ExtensionStats s;
    s.Phi.assign(sz, 0);
    s.Psi.assign(sz, 0);
    s.B.assign(sz, 0);
    s.Bstar.assign(sz, 0);
    s.Lambda.assign(sz, 0);
    s.phi.assign(sz, 0);
    s.psi.assign(sz, 0);
    s.b.assign(sz, 0);
    s.bstar.assign(sz, 0);
    s.phi_prime.assign(sz, 0);
    s.gamma.assign(sz, 0);
    s.cls.assign(sz, UClass::u0);
    s.theta.assign(sz, std::nullopt);
    s.A.assign(sz, std::vector<Mask>(sz, 0));
    s.rho.assign(sz, std::vector<int>(sz, -1));
    s.rho_bar.assign(sz, std::vector<int>(sz, -1));

    Mask u0 = 0;
    for (int i = 0; i < hn; ++i)
        if (e.tlen(i) == 0) u0 |= bit(e.h[static_cast<std::size_t>(i)]);

    const Mask neut = g.all_mask() & ~e.on_t & ~e.on_c;
    for (int i = 0; i < hn; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const Mask nh = g.mask(e.hat(i));
        s.Phi[ui] = nh & e.on_t;
        s.Psi[ui] = nh & e.on_c;
        s.phi[ui] = popcount(s.Phi[ui]);
        s.psi[ui] = popcount(s.Psi[ui]);
        if (e.tlen(i) == 0) {
            s.cls[ui] = UClass::u0;
        } else if (s.Phi[ui] & ~e.t_mask(i)) {
            s.cls[ui] = UClass::u1;
        } else {
            std::vector<int> rev(e.t[ui].rbegin(), e.t[ui].rend());
            auto th = theta_procedure(g, rev, neut, e.on_t & ~e.t_mask(i), edges_count);
            s.cls[ui] = th.stop == ThetaResult::Stop::closed ? UClass::special : UClass::u2;
            s.theta[ui] = std::move(th);
        }
        if (auto r = e.ring(i)) s.B[ui] = g.mask(*r) & u0;
    }
    for (int i = 0; i < hn; ++i) {
        if (e.tlen(i) != 0) continue;
        const int u = e.h[static_cast<std::size_t>(i)];
        for (int j = 0; j < hn; ++j)
            if (auto r = e.ring(j); r && g.adjacent(u, *r)) s.Bstar[static_cast<std::size_t>(i)] |= bit(e.h[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < hn; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        s.b[ui] = popcount(s.B[ui]);
        s.bstar[ui] = popcount(s.Bstar[ui]);
        s.phi_prime[ui] = s.cls[ui] == UClass::special ? 0 : s.phi[ui];
        s.gamma[ui] = e.tlen(i) > 0 ? s.phi_prime[ui] + s.b[ui] : s.phi_prime[ui] - s.bstar[ui];
        const Mask pb = s.Phi[ui] | s.B[ui];
        for (int j = 0; j < hn; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            s.A[ui][uj] = pb & e.t_mask(j);
            if (!s.A[ui][uj]) continue;
            s.Lambda[ui] |= bit(e.h[uj]);
            // furthest member along T(v) from v
            for (auto it = e.t[uj].rbegin(); it != e.t[uj].rend(); ++it) {
                if (s.A[ui][uj] & bit(*it)) {
                    s.rho[ui][uj] = *it;
                    break;
                }
            }
            // an element of both Phi and B resolves to the terminal
            s.rho_bar[ui][uj] = (s.Phi[ui] & bit(s.rho[ui][uj])) ? e.hat(i) : *e.ring(i);
        }
    }
    Rational total(0);
    for (int i = 0; i < hn; ++i) {
        s.beta.push_back(Rational(BigInt(s.gamma[static_cast<std::size_t>(i)] + s.gamma[static_cast<std::size_t>(e.next(i))]), BigInt(2)));
        total += s.beta.back();
    }
    s.mu = total / Rational(hn);
    return s;
}

/// The path v T(v) rho rho_bar T(u) rho_bar' rho' T(w) w, or nullopt when
/// the pieces do not form a simple path.
inline std::optional<std::vector<int>> lambda_path(const HcExtension& e, const ExtensionStats& s, int u, int v, int w) {
    const auto uu = static_cast<std::size_t>(u), uv = static_cast<std::size_t>(v), uw = static_cast<std::size_t>(w);
    if (v == w || s.rho[uu][uv] < 0 || s.rho[uu][uw] < 0) return std::nullopt;
    auto upto = [](const std::vector<int>& p, int x) {
        return std::vector<int>(p.begin(), std::find(p.begin(), p.end(), x) + 1);
    };
    std::vector<int> out = upto(e.t[uv], s.rho[uu][uv]);
    const auto& tu = e.t[uu];
    const auto a = std::find(tu.begin(), tu.end(), s.rho_bar[uu][uv]);
    const auto b = std::find(tu.begin(), tu.end(), s.rho_bar[uu][uw]);
    if (a <= b)
        out.insert(out.end(), a, b + 1);
    else
        out.insert(out.end(), std::make_reverse_iterator(a + 1), std::make_reverse_iterator(b));
    auto tail = upto(e.t[uw], s.rho[uu][uw]);
    out.insert(out.end(), tail.rbegin(), tail.rend());
    if (!is_valid_path(e.graph, PathWitness{out})) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// Transformation of (H, C)-paths

/// Path from V(H) to V(C) with interior avoiding both.
inline bool is_hc_path(const HcExtension& e, const std::vector<int>& p) {
    if (p.size() < 2 || !is_valid_path(e.graph, PathWitness{p})) return false;
    if (!(e.on_h & bit(p.front())) || !(e.on_c & bit(p.back()))) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if ((e.on_h | e.on_c) & bit(p[i])) return false;
    return true;
}

struct TransformResult {
    std::vector<std::vector<int>> paths;
    std::vector<int> starts;
    int steps = 0;
};

namespace detail {

inline Mask touched_roots(const HcExtension& e, const std::vector<std::vector<int>>& paths) {
    Mask m = 0;
    for (const auto& p : paths)
        for (int v : p)
            if (int o = e.owner[static_cast<std::size_t>(v)]; o >= 0) m |= bit(o);
    return m;
}

}  // namespace detail

inline TransformResult t_transform(const HcExtension& e, std::vector<std::vector<int>> paths) {
    Mask seen = 0;
    for (const auto& p : paths) {
        if (!is_hc_path(e, p)) throw PreconditionError("t_transform: input is not an (H,C)-path");
        for (int v : p) {
            if (seen & bit(v)) throw PreconditionError("t_transform: input paths overlap");
            seen |= bit(v);
        }
    }
    TransformResult r;
    const int limit = 4 * e.graph.order() * std::max<int>(1, static_cast<int>(paths.size())) + 4;
    for (;;) {
        Mask starts = 0;
        for (const auto& p : paths) starts |= bit(e.h_index[static_cast<std::size_t>(p.front())]);
        const Mask pending = detail::touched_roots(e, paths) & ~starts;
        if (!pending) break;
        if (++r.steps > limit) throw std::logic_error("t_transform did not settle");
        const int z = lowest_bit(pending);
        Mask on_paths = 0;
        for (const auto& p : paths)
            for (int v : p) on_paths |= bit(v);
        const auto& tz = e.t[static_cast<std::size_t>(z)];
        const auto hit = std::find_if(tz.begin(), tz.end(), [&](int v) { return (on_paths & bit(v)) != 0; });
        const int w = *hit;
        for (auto& p : paths) {
            auto at = std::find(p.begin(), p.end(), w);
            if (at == p.end()) continue;
            std::vector<int> q(tz.begin(), hit);
            q.insert(q.end(), at, p.end());
            p = std::move(q);
            break;
        }
    }
    r.paths = std::move(paths);
    for (const auto& p : r.paths) r.starts.push_back(p.front());
    return r;
}

/// Postconditions of a transformation; returns an error message.
inline std::optional<std::string> transform_error(const HcExtension& e, const std::vector<std::vector<int>>& in,
                                                  const TransformResult& out) {
    if (out.paths.size() != in.size()) return "path count changed";
    Mask seen = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        const auto& p = out.paths[i];
        if (!is_hc_path(e, p)) return "output is not an (H,C)-path";
        if (p.back() != in[i].back()) return "C endpoint moved";
        const int v = p.front();
        if (v != in[i].front() && e.tlen(e.h_index[static_cast<std::size_t>(v)]) == 0) return "new start is in U0";
        for (int x : p) {
            if (seen & bit(x)) return "output paths overlap";
            seen |= bit(x);
        }
    }
    if (popcount(detail::touched_roots(e, out.paths)) != static_cast<int>(in.size()))
        return "touched path count differs from path count";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Restricted longest paths

/// Longest (a, b)-path inside `within`; empty when none exists.
inline PathWitness longest_path_between(const Graph& g, Mask within, int a, int b) {
    PathWitness best;
    if (!(within & bit(a)) || !(within & bit(b))) return best;
    if (a == b) {
        best.vertices = {a};
        return best;
    }
    std::vector<int> path{a};
    auto dfs = [&](auto&& self, int cur, Mask used) -> void {
        if (cur == b) {
            if (path.size() > best.vertices.size()) best.vertices = path;
            return;
        }
        // cheap bound: everything b can still reach
        const Mask room = reach(g, b, (within & ~used) | bit(b));
        if (!(room & g.mask(cur)) && !g.adjacent(cur, b)) return;
        if (path.size() + static_cast<std::size_t>(popcount(room)) <= best.vertices.size()) return;
        for (Mask m = g.mask(cur) & within & ~used; m; m &= m - 1) {
            const int w = lowest_bit(m);
            path.push_back(w);
            self(self, w, used | bit(w));
            path.pop_back();
        }
    };
    dfs(dfs, a, bit(a));
    return best;
}

enum class OVariant {
    xy,        // O(x,y) on V_1
    x_xy,      // O_x(x,y) on V_1 + ring(x)
    ringx_y,   // O(ring(x), y)
    ringx_x,   // O(ring(x), x)
    y_xy,      // O_y(x,y) on V_1 + ring(y)
    ringy_x,   // O(ring(y), x)
    ringy_y,   // O(ring(y), y)
};

/// V_1: x, y and every T(v) for v other than x, y (H indices).
inline Mask v1_mask(const HcExtension& e, int x, int y) {
    Mask m = bit(e.h[static_cast<std::size_t>(x)]) | bit(e.h[static_cast<std::size_t>(y)]);
    for (int v = 0; v < e.size(); ++v)
        if (v != x && v != y) m |= e.t_mask(v);
    return m;
}

/// Longest (x,y)-path on V_1 plus the successor of u on T(u), if any.
inline PathWitness compute_O_via(const HcExtension& e, int x, int y, int u) {
    Mask w = v1_mask(e, x, y);
    if (auto r = e.ring(u)) w |= bit(*r);
    return longest_path_between(e.graph, w, e.h[static_cast<std::size_t>(x)], e.h[static_cast<std::size_t>(y)]);
}

/// Empty witness (length -1) when the path or its ring endpoint does not exist.
inline PathWitness compute_O(const HcExtension& e, int x, int y, OVariant variant, int cap = kMachineryCap) {
    detail::require_machinery_graph(e.graph, cap, "compute_O");
    if (x == y) throw PreconditionError("compute_O needs distinct x, y");
    const int xv = e.h[static_cast<std::size_t>(x)], yv = e.h[static_cast<std::size_t>(y)];
    const Mask v1 = v1_mask(e, x, y);
    const auto rx = e.ring(x), ry = e.ring(y);
    switch (variant) {
        case OVariant::xy:
            return longest_path_between(e.graph, v1, xv, yv);
        case OVariant::x_xy:
            return rx ? longest_path_between(e.graph, v1 | bit(*rx), xv, yv) : PathWitness{};
        case OVariant::ringx_y:
            return rx ? longest_path_between(e.graph, v1 | bit(*rx), *rx, yv) : PathWitness{};
        case OVariant::ringx_x:
            return rx ? longest_path_between(e.graph, v1 | bit(*rx), *rx, xv) : PathWitness{};
        case OVariant::y_xy:
            return ry ? longest_path_between(e.graph, v1 | bit(*ry), xv, yv) : PathWitness{};
        case OVariant::ringy_x:
            return ry ? longest_path_between(e.graph, v1 | bit(*ry), *ry, xv) : PathWitness{};
        case OVariant::ringy_y:
            return ry ? longest_path_between(e.graph, v1 | bit(*ry), *ry, yv) : PathWitness{};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Omega

inline constexpr int kOmegaCap = 10;

struct OmegaResult {
    bool defined = false;
    int length = -1;   // |Omega(x,y)| - 1
    std::vector<int> e_path, f_path;  // a minimizing pair
    long pairs = 0;    // admissible (E, F) pairs seen
};

namespace detail {

/// Every (H,C)-path starting at `start`.
inline std::vector<std::vector<int>> hc_paths_from(const HcExtension& e, int start) {
    std::vector<std::vector<int>> out;
    const Graph& g = e.graph;
    const Mask inner = g.all_mask() & ~e.on_h & ~e.on_c;
    std::vector<int> path{start};
    auto dfs = [&](auto&& self, int cur, Mask used) -> void {
        for (Mask m = g.mask(cur) & e.on_c; m; m &= m - 1) {
            path.push_back(lowest_bit(m));
            out.push_back(path);
            path.pop_back();
        }
        for (Mask m = g.mask(cur) & inner & ~used; m; m &= m - 1) {
            const int w = lowest_bit(m);
            path.push_back(w);
            self(self, w, used | bit(w));
            path.pop_back();
        }
    };
    dfs(dfs, start, bit(start));
    return out;
}

inline Mask path_mask(const std::vector<int>& p) {
    Mask m = 0;
    for (int v : p) m |= bit(v);
    return m;
}

}  // namespace detail

/// Minimum over admissible (E, F) of the longest of O(x,y), Omega_x and
/// Omega_y. E runs from x and F from y, both to C, vertex-disjoint, and
/// together they touch no path of T other than T(x) and T(y).
inline OmegaResult compute_omega(const HcExtension& e, int x, int y, int cap = kOmegaCap) {
    detail::require_machinery_graph(e.graph, cap, "compute_omega");
    if (x == y) throw PreconditionError("compute_omega needs distinct x, y");
    const int len_xy = compute_O(e, x, y, OVariant::xy).length();
    // Omega_x for ring(x) outside both paths, on E, on F
    auto side = [&](int u, OVariant free, OVariant on_own, OVariant on_other) -> std::array<int, 3> {
        if (e.tlen(u) != 1) return {len_xy, len_xy, len_xy};
        return {compute_O(e, x, y, free).length(), compute_O(e, x, y, on_own).length(),
                compute_O(e, x, y, on_other).length()};
    };
    const auto ox = side(x, OVariant::x_xy, OVariant::ringx_y, OVariant::ringx_x);
    const auto oy = side(y, OVariant::y_xy, OVariant::ringy_x, OVariant::ringy_y);
    const auto rx = e.ring(x), ry = e.ring(y);
    const Mask allowed = bit(x) | bit(y);

    OmegaResult r;
    const auto es = detail::hc_paths_from(e, e.h[static_cast<std::size_t>(x)]);
    const auto fs = detail::hc_paths_from(e, e.h[static_cast<std::size_t>(y)]);
    std::vector<Mask> fm;
    for (const auto& f : fs) fm.push_back(detail::path_mask(f));
    for (const auto& ep : es) {
        const Mask em = detail::path_mask(ep);
        if (detail::touched_roots(e, {ep}) & ~allowed) continue;
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (em & fm[j]) continue;
            if (detail::touched_roots(e, {fs[j]}) & ~allowed) continue;
            ++r.pairs;
            auto where = [&](const std::optional<int>& ring) {
                if (!ring) return 0;
                if (em & bit(*ring)) return 1;
                if (fm[j] & bit(*ring)) return 2;
                return 0;
            };
            const int wx = where(rx), wy = where(ry);
            // Omega_y: ring(y) on F is the own-path case
            const int val = std::max({len_xy, ox[static_cast<std::size_t>(wx)],
                                      oy[static_cast<std::size_t>(wy == 1 ? 2 : wy == 2 ? 1 : 0)]});
            if (!r.defined || val < r.length) {
                r.defined = true;
                r.length = val;
                r.e_path = ep;
                r.f_path = fs[j];
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Delta relation

/// v off the odd path L = v_1 .. v_{2t-1}: v adjacent to every odd-indexed vertex.
inline bool in_delta(const Graph& g, int v, const std::vector<int>& l) {
    if (l.empty() || l.size() % 2 == 0) throw PreconditionError("delta relation needs an odd number of path vertices");
    if (std::find(l.begin(), l.end(), v) != l.end()) throw PreconditionError("delta relation: vertex lies on the path");
    for (std::size_t i = 0; i < l.size(); i += 2)
        if (!g.adjacent(v, l[i])) return false;
    return true;
}

/// w on L: w adjacent to every other vertex of L.
inline bool in_delta_on_path(const Graph& g, int w, const std::vector<int>& l) {
    if (std::find(l.begin(), l.end(), w) == l.end()) throw PreconditionError("delta relation: vertex not on the path");
    for (int u : l)
        if (u != w && !g.adjacent(w, u)) return false;
    return true;
}

}  // namespace circum
