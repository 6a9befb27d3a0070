#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcc {

/// One adjacency row per vertex; vertex capacity of the default build.
inline constexpr int kMaxVertices = 64;

/// Vertex subsets are single machine words; bit v is vertex v.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls fn(v) for every vertex of s in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn &&fn)
{
    while (s) {
        int v = lowest(s);
        s &= s - 1;
        fn(v);
    }
}

std::vector<int> to_vector(VertexSet s);

class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

class GraphBuilder;

/// Immutable simple graph on vertices 0..n-1 with bit-matrix adjacency.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    /// Circulant graph: i ~ j iff (j - i) mod n or (i - j) mod n is in distances.
    static Graph circulant(int n, std::span<const int> distances);

    /// Paley graph on a prime p = 1 (mod 4).
    static Graph paley(int p);

    static Graph petersen();

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return popcount(rows_[v]); }
    VertexSet vertices() const { return first_n(n_); }

    std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph &a, const Graph &b);

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> rows_{};
};

/// Mutable staging area for building a Graph; keeps the adjacency symmetric and loop-free.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph &g);

    int order() const { return g_.n_; }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    VertexSet neighbours(int v) const { return g_.rows_[v]; }

    GraphBuilder &add_edge(int u, int v);
    GraphBuilder &remove_edge(int u, int v);
    GraphBuilder &toggle_edge(int u, int v);

    /// Appends an isolated vertex and returns its index.
    int add_vertex();

    const Graph &view() const { return g_; }
    Graph build() const { return g_; }

private:
    void check(int u, int v) const;

    Graph g_;
};

Graph complement(const Graph &g);

/// Disjoint copies of g1 (vertices 0..n1-1) and g2 (n1..n1+n2-1) plus every cross edge.
Graph join(const Graph &g1, const Graph &g2);

Graph disjoint_union(const Graph &g1, const Graph &g2);

/// Subgraph induced by s, relabelled densely in increasing vertex order.
Graph induced(const Graph &g, VertexSet s);

/// Throws std::invalid_argument if {i, j} is not an edge.
Graph remove_edge(const Graph &g, int i, int j);

/// Copy of g with one more vertex adjacent to `neighbourhood`.
Graph add_vertex(const Graph &g, VertexSet neighbourhood);

/// Relabel: vertex v of g becomes vertex label[v].
Graph relabel(const Graph &g, std::span<const int> label);

struct Invariants {
    int omega = 0;
    int alpha = 0;
    int chi = 0;

    friend bool operator==(const Invariants &, const Invariants &) = default;
};

Invariants invariants(const Graph &g);

std::string describe(const Graph &g);

} // namespace qcc
