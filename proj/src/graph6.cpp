#include "regbound/graph6.hpp"

#include "regbound/errors.hpp"

#include <cstdint>

namespace regbound {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
    const auto b = static_cast<unsigned char>(s[pos]);
    if (b < 63 || b > 126) throw Graph6Error("byte out of range 63..126", pos);
    return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    if (pos >= text.size()) throw Graph6Error("missing length field", pos);

    // N(n): 1, 4 or 8 bytes.
    std::uint64_t n = 0;
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = sextet(text, pos);
        pos += 1;
    } else {
        std::size_t width = 3;
        std::size_t start = pos + 1;
        if (start < text.size() && static_cast<unsigned char>(text[start]) == 126) {
            width = 6;
            start += 1;
        }
        if (start + width > text.size()) throw Graph6Error("truncated length field", text.size());
        for (std::size_t i = 0; i < width; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, start + i));
        if ((width == 3 && n < 63) || (width == 6 && n < 258048))
            throw Graph6Error("non-minimal length field", pos);
        pos = start + width;
    }
    if (n > static_cast<std::uint64_t>(kGraph6MaxVertices))
        throw SizeLimitError("graph6 vertex count " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kGraph6MaxVertices));

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes) throw Graph6Error("truncated adjacency data", text.size());
    if (text.size() - pos > bytes) throw Graph6Error("trailing bytes after adjacency data", pos + bytes);

    std::vector<Edge> edges;
    std::uint64_t index = 0;
    const int nv = static_cast<int>(n);
    int row = 0;
    int col = 1;
    for (std::uint64_t b = 0; b < bytes; ++b) {
        const int value = sextet(text, pos + b);
        for (int shift = 5; shift >= 0; --shift, ++index) {
            const bool set = (value >> shift) & 1;
            if (index >= bits) {
                if (set) throw Graph6Error("nonzero padding bit", pos + b);
                continue;
            }
            if (set) edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph(nv, edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw SizeLimitError("graph6 vertex count " + std::to_string(n) + " exceeds cap");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

}  // namespace regbound
