#pragma once

// Graph sources for verification campaigns: the sharp kappa family, G(n,p),
// named graphs and exhaustive enumeration of small connected graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "circum/errors.hpp"
#include "circum/graph.hpp"
#include "circum/rational.hpp"

namespace circum {

/// Closed-form invariants the kappa family is built to realise.
struct FamilyExpectation {
    int kappa = 0;
    int delta = 0;
    int c = 0;
    int cbar = 0;
};

/// (κ+1) disjoint K_{δ-κ+1} joined to K_κ. Copy vertices come first, the
/// hub last.
inline Graph kappa_family(int kappa, int delta) {
    if (kappa < 1 || delta < kappa)
        throw PreconditionError("kappa_family needs kappa >= 1 and delta >= kappa");
    Graph copies = complete_graph(delta - kappa + 1);
    for (int i = 0; i < kappa; ++i) copies = disjoint_union(copies, complete_graph(delta - kappa + 1));
    return join(copies, complete_graph(kappa));
}

inline FamilyExpectation kappa_family_expectation(int kappa, int delta) {
    return {kappa, delta, kappa * (delta - kappa + 2), delta - kappa + 1};
}

/// xorshift64* (Vigna): shifts 12, 25, 27 and multiplier 0x2545F4914F6CDD1D.
/// The seed is expanded through one splitmix64 step so seed 0 is usable.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        state_ = z ^ (z >> 31);
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }
    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

private:
    std::uint64_t state_;
};

/// Each pair (i, j), i < j, taken in row-major order, is an edge iff the next
/// draw r satisfies r < p * 2^64.
inline Graph random_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_gnp needs n >= 1");
    if (p < Rational(0) || p > Rational(1)) throw PreconditionError("random_gnp needs 0 <= p <= 1");
    const BigInt threshold = (p.num() << 64) / p.den();
    Xorshift64Star rng(seed);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (BigInt(rng.next()) < threshold) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(int k) {
    if (k < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Graph::Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edge_list(k, e);
}

inline Graph path_graph(int k) {
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(k, e);
}

inline Graph complete_bipartite(int a, int b) { return join(edgeless_graph(a), edgeless_graph(b)); }

inline Graph petersen_graph() {
    std::vector<Graph::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, e);
}

namespace detail {

inline int parse_int(std::string_view s, const char* what) {
    int v = 0;
    std::size_t used = 0;
    try {
        v = std::stoi(std::string(s), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw PreconditionError(std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
    return v;
}

}  // namespace detail

/// petersen, cycle_k, path_k, complete_k, complete_bipartite_a_b.
inline Graph named_graph(std::string_view name) {
    auto suffix_ints = [&](std::string_view prefix) {
        std::vector<int> out;
        std::string_view rest = name.substr(prefix.size());
        while (!rest.empty()) {
            auto cut = rest.find('_');
            out.push_back(detail::parse_int(rest.substr(0, cut), "named graph parameter"));
            if (cut == std::string_view::npos) break;
            rest = rest.substr(cut + 1);
        }
        return out;
    };
    if (name == "petersen") return petersen_graph();
    if (name.starts_with("complete_bipartite_")) {
        auto a = suffix_ints("complete_bipartite_");
        if (a.size() == 2 && a[0] >= 0 && a[1] >= 0 && a[0] + a[1] >= 1) {
            if (a[0] == 0) return edgeless_graph(a[1]);
            if (a[1] == 0) return edgeless_graph(a[0]);
            return complete_bipartite(a[0], a[1]);
        }
    } else if (name.starts_with("cycle_")) {
        auto a = suffix_ints("cycle_");
        if (a.size() == 1) return cycle_graph(a[0]);
    } else if (name.starts_with("path_")) {
        auto a = suffix_ints("path_");
        if (a.size() == 1 && a[0] >= 1) return path_graph(a[0]);
    } else if (name.starts_with("complete_")) {
        auto a = suffix_ints("complete_");
        if (a.size() == 1 && a[0] >= 1) return complete_graph(a[0]);
    }
    throw PreconditionError("unknown named graph '" + std::string(name) + "'");
}

inline constexpr int kDedupEnumerationCap = 7;
inline constexpr int kLabeledEnumerationCap = 9;

namespace detail {

/// Minimum upper-triangle bit string (graph6 column order, first bit most
/// significant) over all vertex orderings, found by prefix-pruned search.
inline std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm;
    Mask used = 0;
    auto dfs = [&](auto&& self, int pos, std::uint64_t code) -> void {
        if (pos == n) {
            best = std::min(best, code);
            return;
        }
        const int shift = n * (n - 1) / 2 - pos * (pos + 1) / 2;
        for (int v = 0; v < n; ++v) {
            if (used & bit(v)) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < pos; ++i) col = (col << 1) | (g.adjacent(perm[static_cast<std::size_t>(i)], v) ? 1U : 0U);
            const std::uint64_t next = (code << pos) | col;
            if (best != ~std::uint64_t{0} && next > (best >> shift)) continue;
            perm.push_back(v);
            used |= bit(v);
            self(self, pos + 1, next);
            used &= ~bit(v);
            perm.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Graph::Edge> e;
    int k = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --k)
            if ((code >> k) & 1U) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

}  // namespace detail

/// Streams every connected graph on n vertices. With `deduplicate` each
/// isomorphism class is emitted once, in canonical labelling and ascending
/// canonical-code order (n <= 7); otherwise every labelled graph (n <= 9).
inline void enumerate_connected(int n, const std::function<void(const Graph&)>& visit, bool deduplicate = true) {
    if (n < 1) throw PreconditionError("enumerate_connected needs n >= 1");
    if (deduplicate) {
        if (n > kDedupEnumerationCap) throw CapExceeded("deduplicated enumeration is capped at n = 7");
        std::set<std::uint64_t> level{0};
        for (int m = 2; m <= n; ++m) {
            std::set<std::uint64_t> next;
            for (std::uint64_t code : level) {
                Graph base = detail::graph_from_code(m - 1, code);
                auto base_edges = base.edges();
                for (Mask s = 0; s < bit(m - 1); ++s) {
                    auto e = base_edges;
                    for (int v : mask_members(s)) e.emplace_back(v, m - 1);
                    next.insert(detail::canonical_code(Graph::from_edge_list(m, e)));
                }
            }
            level = std::move(next);
        }
        for (std::uint64_t code : level) {
            Graph g = detail::graph_from_code(n, code);
            if (is_connected(g)) visit(g);
        }
        return;
    }
    if (n > kLabeledEnumerationCap) throw CapExceeded("labelled enumeration is capped at n = 9");
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Graph g = detail::graph_from_code(n, code);
        if (is_connected(g)) visit(g);
    }
}

inline std::vector<Graph> connected_graphs(int n, bool deduplicate = true) {
    std::vector<Graph> out;
    enumerate_connected(n, [&](const Graph& g) { out.push_back(g); }, deduplicate);
    return out;
}

/// One generated graph with a label identifying how it was produced.
struct GeneratedGraph {
    Graph graph;
    std::string label;
    std::optional<FamilyExpectation> expected;
};

/// Textual generator description, e.g. "kappa_family:k=2,d=3",
/// "gnp:n=12,p=0.4,seed=7", "named:petersen", "enum:n=6".
/// Ranges "a..b" are accepted for k and d of kappa_family and for n of gnp;
/// gnp also takes count=K (graph i uses seed+i and cycles through n).
struct GeneratorSpec {
    enum class Kind { kappa_family, gnp, named, enumerate_connected };
    Kind kind = Kind::named;
    std::map<std::string, std::string> params;
    std::string name;  // for named
    std::uint64_t seed = 0;

    static bool looks_like(std::string_view text) {
        return text.starts_with("kappa_family:") || text.starts_with("gnp:") || text.starts_with("named:") ||
               text.starts_with("enum:");
    }

    static GeneratorSpec parse(std::string_view text) {
        GeneratorSpec spec;
        auto colon = text.find(':');
        if (colon == std::string_view::npos) throw PreconditionError("generator spec needs 'kind:params'");
        std::string_view kind = text.substr(0, colon);
        std::string_view body = text.substr(colon + 1);
        if (kind == "named") {
            spec.kind = Kind::named;
            spec.name = std::string(body);
            named_graph(spec.name);
            return spec;
        }
        if (kind == "kappa_family")
            spec.kind = Kind::kappa_family;
        else if (kind == "gnp")
            spec.kind = Kind::gnp;
        else if (kind == "enum")
            spec.kind = Kind::enumerate_connected;
        else
            throw PreconditionError("unknown generator kind '" + std::string(kind) + "'");
        while (!body.empty()) {
            auto comma = body.find(',');
            std::string_view item = body.substr(0, comma);
            auto eq = item.find('=');
            if (eq == std::string_view::npos) throw PreconditionError("generator parameter needs key=value");
            spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
        }
        spec.validate();
        return spec;
    }

    std::vector<GeneratedGraph> generate() const {
        std::vector<GeneratedGraph> out;
        switch (kind) {
            case Kind::named:
                out.push_back({named_graph(name), "named:" + name, std::nullopt});
                break;
            case Kind::kappa_family: {
                auto [k0, k1] = range("k");
                auto [d0, d1] = range("d");
                for (int k = k0; k <= k1; ++k)
                    for (int d = std::max(d0, k); d <= d1; ++d)
                        out.push_back({kappa_family(k, d),
                                       "kappa_family:k=" + std::to_string(k) + ",d=" + std::to_string(d),
                                       kappa_family_expectation(k, d)});
                break;
            }
            case Kind::gnp: {
                auto [n0, n1] = range("n");
                const Rational p = Rational::parse(params.at("p"));
                const std::uint64_t base = params.count("seed") ? std::stoull(params.at("seed")) : 0;
                const int count = params.count("count") ? detail::parse_int(params.at("count"), "count") : 1;
                for (int i = 0; i < count; ++i) {
                    const int n = n0 + i % (n1 - n0 + 1);
                    const std::uint64_t s = base + static_cast<std::uint64_t>(i);
                    out.push_back({random_gnp(n, p, s),
                                   "gnp:n=" + std::to_string(n) + ",p=" + params.at("p") + ",seed=" + std::to_string(s),
                                   std::nullopt});
                }
                break;
            }
            case Kind::enumerate_connected: {
                const int n = detail::parse_int(params.at("n"), "n");
                const bool labeled = params.count("labeled") && params.at("labeled") != "0";
                int i = 0;
                enumerate_connected(
                    n,
                    [&](const Graph& g) {
                        out.push_back({g, "enum:n=" + std::to_string(n) + "#" + std::to_string(i++), std::nullopt});
                    },
                    !labeled);
                break;
            }
        }
        return out;
    }

private:
    std::pair<int, int> range(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end()) throw PreconditionError("generator parameter '" + key + "' missing");
        const std::string& v = it->second;
        if (auto dots = v.find(".."); dots != std::string::npos) {
            int a = detail::parse_int(std::string_view(v).substr(0, dots), key.c_str());
            int b = detail::parse_int(std::string_view(v).substr(dots + 2), key.c_str());
            if (a > b) throw PreconditionError("empty range for '" + key + "'");
            return {a, b};
        }
        int a = detail::parse_int(v, key.c_str());
        return {a, a};
    }

    void validate() const {
        switch (kind) {
            case Kind::kappa_family: {
                auto [k0, k1] = range("k");
                auto [d0, d1] = range("d");
                if (k0 < 1) throw PreconditionError("kappa_family needs k >= 1");
                if (d1 < k0) throw PreconditionError("kappa_family needs d >= k");
                (void)k1;
                (void)d0;
                break;
            }
            case Kind::gnp: {
                auto [n0, n1] = range("n");
                if (n0 < 1) throw PreconditionError("gnp needs n >= 1");
                (void)n1;
                if (!params.count("p")) throw PreconditionError("gnp needs p");
                Rational p = Rational::parse(params.at("p"));
                if (p < Rational(0) || p > Rational(1)) throw PreconditionError("gnp needs 0 <= p <= 1");
                if (params.count("count") && detail::parse_int(params.at("count"), "count") < 1)
                    throw PreconditionError("gnp count must be positive");
                if (params.count("seed")) {
                    const auto& s = params.at("seed");
                    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                        throw PreconditionError("gnp seed must be a non-negative integer");
                }
                break;
            }
            case Kind::enumerate_connected: {
                if (!params.count("n")) throw PreconditionError("enum needs n");
                const int n = detail::parse_int(params.at("n"), "n");
                const bool labeled = params.count("labeled") && params.at("labeled") != "0";
                if (n < 1) throw PreconditionError("enum needs n >= 1");
                if (n > (labeled ? kLabeledEnumerationCap : kDedupEnumerationCap))
                    throw CapExceeded("enum: n above enumeration cap");
                break;
            }
            case Kind::named:
                break;
        }
    }
};

}  // namespace circum
