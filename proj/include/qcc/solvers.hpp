#pragma once

#include <qcc/graph.hpp>

#include <optional>
#include <vector>

namespace qcc {

// Exact maximum clique: bitset branch and bound with a greedy colouring bound.

int clique_number(const Graph &g);
VertexSet maximum_clique(const Graph &g);

/// Largest clique inside the candidate set; 0 if empty.
int clique_number_within(const Graph &g, VertexSet candidates);
VertexSet maximum_clique_within(const Graph &g, VertexSet candidates);

int independence_number(const Graph &g);
VertexSet maximum_independent_set(const Graph &g);

/// True iff g has a clique on `size` vertices.
bool has_clique(const Graph &g, int size);

/// Number of cliques with exactly `size` vertices whose vertices all lie in `candidates`.
std::uint64_t count_cliques(const Graph &g, int size, VertexSet candidates);

// Exact colouring: DSATUR branch and bound seeded with a maximum clique.

int chromatic_number(const Graph &g);

/// A proper colouring (colour per vertex, 0-based) using chromatic_number(g) colours.
std::vector<int> optimal_colouring(const Graph &g);

/// A proper colouring with at most `colours` colours, or nullopt if none exists.
std::optional<std::vector<int>> find_colouring(const Graph &g, int colours);

bool is_proper_colouring(const Graph &g, const std::vector<int> &colour);

/// Greedy DSATUR colouring; an upper bound on the chromatic number.
std::vector<int> dsatur_colouring(const Graph &g);

int colours_used(const std::vector<int> &colour);

} // namespace qcc
