#ifndef HARDCORE_GRAPH6_HPP
#define HARDCORE_GRAPH6_HPP

#include <string>
#include <string_view>

#include "graph.hpp"

namespace hardcore::graph6 {

/// Decodes one graph6 line (an optional ">>graph6<<" header is stripped).
/// Strict: only canonical length prefixes and zero padding bits are accepted;
/// errors name the offending byte offset.
Graph decode(std::string_view line);

/// Canonical graph6 encoding; decode(encode(g)) == g vertex-for-vertex.
std::string encode(const Graph& g);

} // namespace hardcore::graph6

#endif
