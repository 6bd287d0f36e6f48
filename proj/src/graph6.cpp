#include <cstddef>
#include <string>

#include "linf/graph.hpp"

namespace linf {

namespace {

constexpr int kG6Min = 63;   // '?'
constexpr int kG6Max = 126;  // '~'

int body_bytes(int n) {
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

int decode_byte(std::string_view text, std::size_t offset) {
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < kG6Min || c > kG6Max) {
        throw Graph6ParseError("graph6: byte outside printable range 63..126 at offset " +
                                   std::to_string(offset),
                               offset);
    }
    return c - kG6Min;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("graph6: empty input (malformed length header)", 0);

    std::size_t pos = 0;
    long long n;
    if (text[0] != '~') {
        n = decode_byte(text, 0);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            // 8-byte header means n >= 258048, far beyond the backend cap
            throw CapExceededError("graph6: vertex count exceeds cap " +
                                   std::to_string(kMaxVertices));
        }
        if (text.size() < 4) {
            throw Graph6ParseError("graph6: truncated extended length header", text.size());
        }
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text, i);
        if (n < 63) {
            throw Graph6ParseError("graph6: extended header used for n < 63", 0);
        }
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw CapExceededError("graph6: vertex count " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kMaxVertices));
    }

    int nn = static_cast<int>(n);
    std::size_t expected = pos + static_cast<std::size_t>(body_bytes(nn));
    if (text.size() < expected) {
        throw Graph6ParseError("graph6: truncated body, expected " + std::to_string(expected) +
                                   " bytes",
                               text.size());
    }
    if (text.size() > expected) {
        throw Graph6ParseError("graph6: unexpected trailing bytes at offset " +
                                   std::to_string(expected),
                               expected);
    }

    Graph g(nn);
    long long bits = static_cast<long long>(nn) * (nn - 1) / 2;
    long long bit = 0;
    for (int j = 2; j <= nn; ++j) {
        for (int i = 1; i < j; ++i, ++bit) {
            std::size_t offset = pos + static_cast<std::size_t>(bit / 6);
            int group = decode_byte(text, offset);
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding must be zero
    for (; bit < 6ll * body_bytes(nn); ++bit) {
        std::size_t offset = pos + static_cast<std::size_t>(bit / 6);
        int group = decode_byte(text, offset);
        if ((group >> (5 - bit % 6)) & 1) {
            throw Graph6ParseError("graph6: trailing bits nonzero at offset " +
                                       std::to_string(offset),
                                   offset);
        }
    }
    (void)bits;
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Min));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Min));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Min));
        out.push_back(static_cast<char>((n & 63) + kG6Min));
    }
    int group = 0, filled = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Min));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Min));
    return out;
}

}  // namespace linf
