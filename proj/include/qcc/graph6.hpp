#pragma once

#include <qcc/graph.hpp>

#include <string>
#include <string_view>

namespace qcc {

/// graph6 encoding: order byte(s), then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups offset by 63.
std::string to_graph6(const Graph &g);

/// Inverse of to_graph6. Throws std::invalid_argument on malformed input and
/// CapacityError when the encoded order exceeds kMaxVertices.
Graph from_graph6(std::string_view text);

} // namespace qcc
