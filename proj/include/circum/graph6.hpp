#pragma once

// graph6 codec (McKay's format). Size field N(n) followed by the upper
// triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, each
// byte offset by 63.

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline int g6_value(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126) throw Graph6Error("graph6: byte " + std::to_string(v) + " outside 63..126");
    return v - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    if (text.starts_with(detail::kGraph6Header)) text.remove_prefix(detail::kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty record");

    std::size_t pos = 0;
    auto take = [&]() {
        if (pos >= text.size()) throw Graph6Error("graph6: truncated size field");
        return detail::g6_value(text[pos++]);
    };

    std::uint64_t n = 0;
    int first = take();
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
    } else {
        int second = take();
        if (second < 63) {
            n = static_cast<std::uint64_t>(second);
            for (int i = 0; i < 2; ++i) n = (n << 6) | static_cast<std::uint64_t>(take());
        } else {
            for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(take());
        }
    }
    if (n < 1) throw Graph6Error("graph6: zero-vertex graphs are not representable");
    if (n > (1U << 20)) throw Graph6Error("graph6: order too large");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Graph6Error("graph6: expected " + std::to_string(bytes) + " edge bytes, found " +
                          std::to_string(text.size() - pos));

    std::vector<Graph::Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t b = 0; b < bytes; ++b) {
        const int chunk = detail::g6_value(text[pos + b]);
        for (int s = 5; s >= 0; --s, ++k) {
            const bool set = (chunk >> s) & 1;
            if (k >= bits) {
                if (set) throw Graph6Error("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // column-major: find j with j(j-1)/2 <= k < j(j+1)/2
                std::uint64_t j = 1;
                while (j * (j + 1) / 2 <= k) ++j;
                const std::uint64_t i = k - j * (j - 1) / 2;
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline std::string encode_graph6(const Graph& g) {
    std::string out;
    const auto n = static_cast<std::uint64_t>(g.order());
    auto put = [&](std::uint64_t v) { out.push_back(static_cast<char>(v + 63)); };
    if (n <= 62) {
        put(n);
    } else if (n <= 258047) {
        put(63);
        for (int s = 12; s >= 0; s -= 6) put((n >> s) & 63);
    } else {
        put(63);
        put(63);
        for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                put(static_cast<std::uint64_t>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) put(static_cast<std::uint64_t>(acc << (6 - filled)));
    return out;
}

/// Newline-separated graph6 records; blank lines are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

inline void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace circum
