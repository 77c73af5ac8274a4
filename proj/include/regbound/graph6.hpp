#pragma once

#include "regbound/graph.hpp"

#include <string>
#include <string_view>

namespace regbound {

inline constexpr long long kGraph6MaxVertices = 100000;

// Decodes one graph6 word. An optional ">>graph6<<" header is accepted.
// Throws Graph6Error (with byte offset) on malformed input and
// SizeLimitError when the vertex count exceeds kGraph6MaxVertices.
Graph parse_graph6(std::string_view text);

// Canonical graph6 encoding without header or trailing newline.
std::string write_graph6(const Graph& g);

}  // namespace regbound
