#pragma once

#include "irreg/graph.hpp"

#include <string>
#include <string_view>

namespace irreg {

// graph6 (McKay): N(n) header then the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... packed six bits per byte, each byte offset by 63. Headers of
// 1, 4 or 8 bytes cover n <= 62, n <= 258047 and n <= 68719476735.

/// Throws ParseError on an empty string, a byte outside 63..126, a short
/// header, a truncated or over-long bit vector, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace irreg
