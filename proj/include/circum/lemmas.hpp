#pragma once

// Inequality checks over extension instances, and a driver that runs them
// over every (C, H, maximal T) triple of a small graph.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circum/extension.hpp"

namespace circum {

struct CheckResult {
    std::string id;
    bool holds = true;
    bool vacuous = true;  // no case met the premise
    long cases = 0;
    Rational lhs, rhs;    // tightest case, or the first violating one
    std::string context;
};

inline const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids{"b1", "b2", "lemma3", "d1", "d2", "d3", "e1", "e2", "g1",
                                              "g2", "g3", "g5", "g6", "i1", "i7", "i8", "lemma8"};
    return ids;
}

namespace detail {

class Recorder {
public:
    explicit Recorder(std::string id) { r_.id = std::move(id); }

    template <class Ctx>
    void ge(const Rational& lhs, const Rational& rhs, Ctx&& ctx) {
        note(lhs, rhs, lhs - rhs, lhs >= rhs, ctx);
    }
    template <class Ctx>
    void eq(const Rational& lhs, const Rational& rhs, Ctx&& ctx) {
        Rational d = lhs - rhs;
        note(lhs, rhs, d < Rational(0) ? -d : d, lhs == rhs, ctx);
    }

    CheckResult done() { return std::move(r_); }

private:
    template <class Ctx>
    void note(const Rational& lhs, const Rational& rhs, const Rational& slack, bool ok, Ctx&& ctx) {
        ++r_.cases;
        const bool first = r_.vacuous;
        r_.vacuous = false;
        if (!r_.holds) return;
        if (!ok) {
            r_.holds = false;
        } else if (!first && !(slack < best_)) {
            return;
        }
        best_ = slack;
        r_.lhs = lhs;
        r_.rhs = rhs;
        r_.context = ctx();
    }

    CheckResult r_;
    Rational best_;
};

}  // namespace detail

/// One (C, H, T) instance with lazily computed path lengths.
class LemmaContext {
public:
    explicit LemmaContext(HcExtension e, bool edges_count = true, int omega_cap = kOmegaCap)
        : ext_(std::move(e)), stats_(compute_stats(ext_, edges_count)), omega_cap_(omega_cap) {}

    const HcExtension& ext() const { return ext_; }
    const ExtensionStats& stats() const { return stats_; }

    /// |O| - 1 for the chosen variant; -1 when the path does not exist.
    int O(int x, int y, OVariant v) {
        auto key = std::tuple(x, y, static_cast<int>(v));
        auto it = o_.find(key);
        if (it != o_.end()) return it->second;
        return o_[key] = compute_O(ext_, x, y, v).length();
    }
    /// |O_u(x,y)| - 1: V_1 widened by the successor of u on T(u).
    int O_via(int x, int y, int u) {
        if (u == x) return O(x, y, OVariant::x_xy);
        if (u == y) return O(x, y, OVariant::y_xy);
        return O(x, y, OVariant::xy);
    }

    bool omega_available() const { return ext_.graph.order() <= omega_cap_; }
    const OmegaResult& omega(int x, int y) {
        if (x > y) std::swap(x, y);
        auto key = std::pair(x, y);
        auto it = omega_.find(key);
        if (it != omega_.end()) return it->second;
        return omega_[key] = compute_omega(ext_, x, y, omega_cap_);
    }

    std::string name(int i) const {
        return "u" + std::to_string(i + 1) + "(" + std::to_string(ext_.h[static_cast<std::size_t>(i)]) + ")";
    }

private:
    HcExtension ext_;
    ExtensionStats stats_;
    int omega_cap_;
    std::map<std::tuple<int, int, int>, int> o_;
    std::map<std::pair<int, int>, OmegaResult> omega_;
};

// ---------------------------------------------------------------------------
// Lemma on a path Q outside C with pendant paths P_i

namespace detail {

inline std::string seq(const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += (s.empty() ? "" : "-") + std::to_string(v);
    return s;
}

}  // namespace detail

/// Checks c >= sum |Z_i| + |union Z_i| for one system; Z_i are the C-neighbours
/// of the far ends of the P_i. Throws on a malformed system.
inline void record_lemma3(detail::Recorder& rec, const Graph& g, const CycleWitness& c, const std::vector<int>& q,
                          const std::vector<std::vector<int>>& ps) {
    Mask cm = 0;
    for (int v : c.vertices) cm |= bit(v);
    Mask qm = 0;
    for (int v : q) qm |= bit(v);
    if (q.empty() || !is_valid_path(g, PathWitness{q}) || (qm & cm)) throw PreconditionError("lemma3: Q must be a path outside C");
    Mask seen = 0;
    long sum = 0;
    Mask uni = 0;
    for (const auto& p : ps) {
        if (p.empty() || !is_valid_path(g, PathWitness{p})) throw PreconditionError("lemma3: P_i must be a path");
        if (!(qm & bit(p.front()))) throw PreconditionError("lemma3: P_i must start on Q");
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Mask b = bit(p[i]);
            if ((b & cm) || (b & seen) || (i > 0 && (b & qm))) throw PreconditionError("lemma3: malformed pendant paths");
            seen |= b;
        }
        const Mask z = g.mask(p.back()) & cm;
        sum += popcount(z);
        uni |= z;
    }
    rec.ge(Rational(c.length()), Rational(sum + popcount(uni)), [&] {
        std::string s = "Q=" + detail::seq(q);
        for (const auto& p : ps) s += " P=" + detail::seq(p);
        return s;
    });
}

/// Enumerates systems on (G, C): Q over paths of G \ C, with every vertex of
/// Q carrying a trivial pendant, or one vertex carrying a pendant of length
/// 1 or 2 away from Q.
inline CheckResult check_lemma3(const Graph& g, const CycleWitness& c, int max_paths = 60, int max_systems = 400) {
    detail::Recorder rec("lemma3");
    Mask cm = 0;
    for (int v : c.vertices) cm |= bit(v);
    const Mask rest = g.all_mask() & ~cm;
    std::vector<std::vector<int>> qs;
    std::vector<int> path;
    auto walk = [&](auto&& self, int cur, Mask used) -> void {
        if (static_cast<int>(qs.size()) >= max_paths) return;
        if (path.size() == 1 || path.front() < path.back()) qs.push_back(path);
        for (Mask m = g.mask(cur) & rest & ~used; m; m &= m - 1) {
            const int w = lowest_bit(m);
            path.push_back(w);
            self(self, w, used | bit(w));
            path.pop_back();
        }
    };
    for (Mask m = rest; m; m &= m - 1) {
        path.assign(1, lowest_bit(m));
        walk(walk, path[0], bit(path[0]));
    }
    int systems = 0;
    for (const auto& q : qs) {
        Mask qm = 0;
        for (int v : q) qm |= bit(v);
        std::vector<std::vector<int>> trivial;
        for (int v : q) trivial.push_back({v});
        if (++systems > max_systems) break;
        record_lemma3(rec, g, c, q, trivial);
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (Mask m1 = g.mask(q[i]) & rest & ~qm; m1; m1 &= m1 - 1) {
                const int a = lowest_bit(m1);
                auto ps = trivial;
                ps[i] = {q[i], a};
                if (++systems > max_systems) break;
                record_lemma3(rec, g, c, q, ps);
                for (Mask m2 = g.mask(a) & rest & ~qm & ~bit(a); m2; m2 &= m2 - 1) {
                    ps[i] = {q[i], a, lowest_bit(m2)};
                    if (++systems > max_systems) break;
                    record_lemma3(rec, g, c, q, ps);
                }
            }
        }
    }
    return rec.done();
}

// ---------------------------------------------------------------------------

inline CheckResult check_lemma(LemmaContext& ctx, const std::string& id) {
    const HcExtension& e = ctx.ext();
    const ExtensionStats& s = ctx.stats();
    const Graph& g = e.graph;
    const int hn = e.size();
    detail::Recorder rec(id);
    auto at = [](const auto& v, int i) { return v[static_cast<std::size_t>(i)]; };
    auto R = [](long v) { return Rational(static_cast<std::int64_t>(v)); };
    auto max_beta = [&] {
        Rational m = s.beta.front();
        for (const auto& b : s.beta) m = std::max(m, b);
        return m;
    };
    auto each_pair = [&](auto&& f) {
        for (int x = 0; x < hn; ++x)
            for (int y = 0; y < hn; ++y)
                if (x != y) f(x, y);
    };
    auto pair_name = [&](int x, int y) { return "x=" + ctx.name(x) + " y=" + ctx.name(y); };

    if (id == "b1") {
        for (int u = 0; u < hn; ++u) {
            if (e.tlen(u) == 0 || e.hat(u) == *e.ring(u)) continue;
            rec.eq(R(popcount(at(s.Phi, u) & at(s.B, u))), R(0), [&] { return "u=" + ctx.name(u); });
        }
    } else if (id == "b2") {
        long lhs = 0, rhs = 0, sg = 0, sp = 0;
        for (int u = 0; u < hn; ++u) {
            (e.tlen(u) > 0 ? lhs : rhs) += e.tlen(u) > 0 ? at(s.b, u) : at(s.bstar, u);
            sg += at(s.gamma, u);
            sp += at(s.phi_prime, u);
        }
        rec.eq(R(lhs), R(rhs), [] { return std::string("sum b over nontrivial vs sum b* over U0"); });
        rec.eq(R(sg), R(sp), [] { return std::string("sum gamma vs sum phi'"); });
        for (int u = 0; u < hn; ++u) {
            long parts = 0;
            for (int v = 0; v < hn; ++v) parts += popcount(at(at(s.A, u), v));
            rec.eq(R(popcount(at(s.Phi, u) | at(s.B, u))), R(parts), [&] { return "|Phi u B| vs sum |A(v)| at u=" + ctx.name(u); });
        }
    } else if (id == "lemma3") {
        return check_lemma3(g, e.cycle);
    } else if (id == "d1" || id == "d2" || id == "d3") {
        for (int u = 0; u < hn; ++u) {
            auto where = [&] { return "u=" + ctx.name(u); };
            if (id == "d1" && e.tlen(u) >= 2) rec.ge(R(hn), R(2L * at(s.gamma, u)), where);
            // For special u, phi' is 0 and the middle term of the chain cannot
            // hold; the argument there gives h >= 2(gamma + 1) instead.
            if (id == "d2" && e.tlen(u) == 1) {
                if (at(s.cls, u) == UClass::special) {
                    rec.ge(R(hn), R(2L * (at(s.gamma, u) + 1L)), where);
                } else {
                    rec.ge(R(hn), R(2L * at(s.phi_prime, u)), where);
                    rec.ge(R(2L * at(s.phi_prime, u)), R(at(s.gamma, u) + 1L), where);
                }
            }
            if (id == "d3") rec.ge(R(hn), R(at(s.gamma, u) + 1L), where);
        }
    } else if (id == "e1" || id == "e2") {
        const int want = id == "e1" ? 2 : 1;
        for (int u = 0; u < hn; ++u) {
            if (id == "e1" ? e.tlen(u) < 2 : e.tlen(u) != 1) continue;
            for (int x = 0; x < hn; ++x) {
                for (int y = 0; y < hn; ++y) {
                    Mask seg = 0;
                    for (int k = x;; k = e.next(k)) {
                        seg |= bit(e.h[static_cast<std::size_t>(k)]);
                        if (k == y) break;
                    }
                    if (at(s.Lambda, u) & ~seg) continue;
                    rec.ge(R(e.segment_len(x, y)), R(at(s.gamma, u) - (want == 2 ? 0L : 1L)),
                           [&] { return "u=" + ctx.name(u) + " " + pair_name(x, y); });
                }
            }
        }
    } else if (id == "g1" || id == "g2" || id == "g3" || id == "g6") {
        for (int u = 0; u < hn; ++u) {
            const auto cls = at(s.cls, u);
            if (id == "g1" && cls != UClass::special) continue;
            if (id == "g2" && e.tlen(u) < 2) continue;
            if (id == "g3" && e.tlen(u) != 1) continue;
            each_pair([&](int x, int y) {
                auto where = [&] { return "u=" + ctx.name(u) + " " + pair_name(x, y); };
                const long gu = at(s.gamma, u);
                if (id == "g1") rec.ge(R(ctx.O(x, y, OVariant::xy)), R(gu + 1), where);
                if (id == "g2") rec.ge(R(ctx.O(x, y, OVariant::xy)), R(gu), where);
                if (id == "g3") rec.ge(R(ctx.O_via(x, y, u)), R(gu - 1), where);
                if (id == "g6" && (u == e.next(x) || u == e.prev(x) || u == e.next(y) || u == e.prev(y)))
                    rec.ge(R(ctx.O(x, y, OVariant::xy)), R(gu), where);
            });
        }
    } else if (id == "g5") {
        each_pair([&](int x, int y) {
            if (e.tlen(x) != 1) return;
            const int m = std::min(ctx.O(x, y, OVariant::ringx_x), ctx.O(x, y, OVariant::ringx_y));
            rec.ge(R(m), R(at(s.gamma, x)), [&] { return pair_name(x, y); });
        });
    } else if (id == "lemma8" || id == "i1" || id == "i7" || id == "i8") {
        if (!ctx.omega_available()) return rec.done();
        each_pair([&](int x, int y) {
            const OmegaResult& om = ctx.omega(x, y);
            if (!om.defined) return;
            const Rational lhs = R(om.length);
            auto where = [&] { return pair_name(x, y) + " E=" + detail::seq(om.e_path) + " F=" + detail::seq(om.f_path); };
            if (id == "lemma8") {
                int rhs = ctx.O(x, y, OVariant::xy);
                if (e.tlen(x) == 1)
                    rhs = std::max(rhs, std::min({ctx.O(x, y, OVariant::x_xy), ctx.O(x, y, OVariant::ringx_y),
                                                  ctx.O(x, y, OVariant::ringx_x)}));
                if (e.tlen(y) == 1)
                    rhs = std::max(rhs, std::min({ctx.O(x, y, OVariant::y_xy), ctx.O(x, y, OVariant::ringy_x),
                                                  ctx.O(x, y, OVariant::ringy_y)}));
                rec.ge(lhs, R(rhs), where);
            } else if (id == "i1") {
                for (int i = 0; i < hn; ++i) {
                    if (i == x || i == y || e.next(i) == x || e.next(i) == y) continue;
                    rec.ge(lhs, at(s.beta, i), [&] { return where() + " i=" + std::to_string(i + 1); });
                }
            } else if (id == "i7") {
                if (e.tlen(x) > 0 && e.tlen(y) > 0) rec.ge(lhs, max_beta(), where);
            } else if (e.segment_len(x, y) == 1) {
                rec.ge(lhs, max_beta(), where);
            }
        });
    } else {
        throw PreconditionError("unsupported lemma id '" + id + "'");
    }
    return rec.done();
}

// ---------------------------------------------------------------------------
// Driver

struct LemmaTally {
    std::string id;
    long cases = 0;
    long violations = 0;  // instances with at least one violated case
    std::optional<CheckResult> first_violation;
};

struct LemmaSuiteResult {
    bool skipped = false;
    std::string skip_reason;
    long cycles = 0;     // longest cycles C examined
    long instances = 0;  // (C, H, T) triples
    std::vector<LemmaTally> tallies;

    long violations() const {
        long v = 0;
        for (const auto& t : tallies) v += t.violations;
        return v;
    }
};

namespace detail {

inline void tally(LemmaTally& t, const CheckResult& r, const std::string& where) {
    t.cases += r.cases;
    if (!r.holds) {
        ++t.violations;
        if (!t.first_violation) {
            t.first_violation = r;
            t.first_violation->context = where + " " + r.context;
        }
    }
}

}  // namespace detail

struct SuiteOptions {
    bool edges_count = true;  // single edges count as V_neut-paths in Theta
    int omega_cap = kOmegaCap;
};

/// Runs every supported check on every longest C, every longest H of G \ C
/// with at least three vertices, and the maximal extension of each pair.
inline LemmaSuiteResult run_lemma_suite(const Graph& g, const SuiteOptions& opt = {}) {
    LemmaSuiteResult out;
    for (const auto& id : lemma_ids()) out.tallies.push_back({id, 0, 0, std::nullopt});
    if (g.order() > kMachineryCap) {
        out.skipped = true;
        out.skip_reason = "order above machinery cap " + std::to_string(kMachineryCap);
        return out;
    }
    for (const auto& c : all_longest_cycles(g)) {
        ++out.cycles;
        auto rest = delete_vertices(g, VertexSet::of(g.order(), c.vertices));
        if (!rest) continue;
        auto hs = all_longest_cycles(rest->graph);
        if (hs.empty() || hs.front().length() < 3) continue;
        const std::string cname = "C=" + detail::seq(c.vertices);
        bool lemma3_done = false;
        for (auto h : hs) {
            for (int& v : h.vertices) v = rest->old_index[static_cast<std::size_t>(v)];
            LemmaContext ctx(maximal_hc_extension(g, c, h.vertices), opt.edges_count, opt.omega_cap);
            ++out.instances;
            const std::string where = cname + " H=" + detail::seq(h.vertices);
            for (auto& t : out.tallies) {
                if (t.id == "lemma3") {
                    if (lemma3_done) continue;
                    lemma3_done = true;
                }
                detail::tally(t, check_lemma(ctx, t.id), where);
            }
        }
    }
    if (out.instances == 0) {
        out.skipped = true;
        out.skip_reason = "no proper residual cycle";
    }
    return out;
}

}  // namespace circum
