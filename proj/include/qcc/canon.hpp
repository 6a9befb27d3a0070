#pragma once

#include <qcc/graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qcc {

/// Result of canonical labelling. `order[p]` is the vertex placed at canonical
/// position p; `label` is its inverse. Relabelling by `label` yields `form`,
/// which is the same graph for every member of an isomorphism class.
struct CanonicalLabeling {
    std::vector<int> order;
    std::vector<int> label;
    Graph form;
    /// Vertices shown (by automorphisms found during the search) to share an
    /// orbit with order.back(). Always contains order.back() when n > 0.
    VertexSet last_orbit = 0;
};

/// Colour refinement to an equitable partition, then individualisation and
/// refinement over a search tree pruned by discovered automorphisms.
CanonicalLabeling canonical_labeling(const Graph &g);

Graph canonical_form(const Graph &g);

std::string canonical_graph6(const Graph &g);

bool isomorphic(const Graph &a, const Graph &b);

// Packed codes: the graph6-order adjacency bits of a graph as one integer,
// first pair most significant. Numeric order matches graph6 string order
// among graphs of the same order.

inline constexpr int kMaxCodeOrder = 11;

std::uint64_t graph_code(const Graph &g);

Graph graph_from_code(int n, std::uint64_t code);

std::uint64_t canonical_code(const Graph &g);

} // namespace qcc
