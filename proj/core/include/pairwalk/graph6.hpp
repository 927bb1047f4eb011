#pragma once

#include <string>
#include <string_view>

#include "pairwalk/graph.hpp"

namespace pairwalk {

/// Parse one short-form graph6 line (n <= 62). An optional ">>graph6<<"
/// prefix is tolerated. Throws std::invalid_argument on malformed input,
/// including nonzero padding bits or a length mismatch.
Graph parse_graph6(std::string_view line);

/// Short-form graph6 encoding (unweighted graphs only, n <= 62).
std::string to_graph6(const Graph& x);

/// Parse a whitespace-separated edge list: one "u v [w]" per line, '#'
/// comments, 0-based vertices. The vertex count is max index + 1.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& x);

}  // namespace pairwalk
