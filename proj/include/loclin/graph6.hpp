#pragma once

// graph6 text encoding: N(n) followed by the upper triangle of the adjacency
// matrix read column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// big-endian six bits per byte and offset by 63. No ">>graph6<<" header.

#include <array>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace loclin {

inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// Parses one graph6 line. A trailing '\n' (and '\r') is tolerated.
inline Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw parse_error("empty graph6 line", 0);

    auto sixbits = [&](std::size_t pos) -> int {
        if (pos >= line.size()) throw parse_error("truncated graph6 data", pos);
        const int c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw parse_error("invalid graph6 character", pos);
        return c - 63;
    };

    std::size_t pos = 0;
    int n = sixbits(pos);
    ++pos;
    if (n == 63) {
        if (pos < line.size() && line[pos] == '~')
            throw parse_error("graph6 orders above 258047 are unsupported", pos);
        n = (sixbits(1) << 12) | (sixbits(2) << 6) | sixbits(3);
        pos = 4;
        if (n <= 62) throw parse_error("non-minimal graph6 order encoding", 1);
    }
    if (n > max_order) throw parse_error("graph order " + std::to_string(n) + " exceeds 64", 0);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() < pos + body) throw parse_error("truncated graph6 data", line.size());
    if (line.size() > pos + body) throw parse_error("trailing bytes after graph6 data", pos + body);

    std::array<vset, max_order> adj{};
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sixbits(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    if (k % 6) {
        const int byte = sixbits(pos + k / 6);
        if (byte & ((1 << (6 - k % 6)) - 1)) throw parse_error("nonzero graph6 padding bits", pos + k / 6);
    }
    return Graph::from_adjacency(n, {adj.data(), static_cast<std::size_t>(n)});
}

}  // namespace loclin
