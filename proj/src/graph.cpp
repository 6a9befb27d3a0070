#include <qcc/graph.hpp>
#include <qcc/solvers.hpp>

#include <algorithm>
#include <sstream>

namespace qcc {

namespace {

void check_order(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(kMaxVertices));
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

std::vector<int> to_vector(VertexSet s)
{
    std::vector<int> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n)
{
    check_order(n);
    n_ = n;
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.rows_[v] = first_n(n) & ~bit(v);
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph Graph::path(int n)
{
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

Graph Graph::circulant(int n, std::span<const int> distances)
{
    GraphBuilder b(n);
    for (int d : distances) {
        int step = ((d % n) + n) % n;
        if (step == 0)
            throw std::invalid_argument("circulant distance 0 would create loops");
        for (int v = 0; v < n; ++v)
            b.add_edge(v, (v + step) % n);
    }
    return b.build();
}

Graph Graph::paley(int p)
{
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("Paley graph needs a prime p = 1 mod 4");
    std::vector<int> residues;
    for (int x = 1; x < p; ++x)
        residues.push_back(x * x % p);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    return circulant(p, residues);
}

Graph Graph::petersen()
{
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return b.build();
}

int Graph::size() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += popcount(rows_[v]);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_vertex(rows_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

bool operator==(const Graph &a, const Graph &b)
{
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph &g) : g_(g) {}

void GraphBuilder::check(int u, int v) const
{
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
        throw std::out_of_range("vertex out of range");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
}

GraphBuilder &GraphBuilder::add_edge(int u, int v)
{
    check(u, v);
    g_.rows_[u] |= bit(v);
    g_.rows_[v] |= bit(u);
    return *this;
}

GraphBuilder &GraphBuilder::remove_edge(int u, int v)
{
    check(u, v);
    g_.rows_[u] &= ~bit(v);
    g_.rows_[v] &= ~bit(u);
    return *this;
}

int GraphBuilder::add_vertex()
{
    if (g_.n_ >= kMaxVertices)
        throw CapacityError("graph is at capacity");
    return g_.n_++;
}

GraphBuilder &GraphBuilder::toggle_edge(int u, int v)
{
    check(u, v);
    g_.rows_[u] ^= bit(v);
    g_.rows_[v] ^= bit(u);
    return *this;
}

Graph complement(const Graph &g)
{
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

Graph disjoint_union(const Graph &g1, const Graph &g2)
{
    int n1 = g1.order();
    int n = n1 + g2.order();
    if (n > kMaxVertices)
        throw CapacityError("disjoint union would have " + std::to_string(n) + " vertices");
    GraphBuilder b(n);
    for (auto [u, v] : g1.edges())
        b.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        b.add_edge(u + n1, v + n1);
    return b.build();
}

Graph join(const Graph &g1, const Graph &g2)
{
    GraphBuilder b(disjoint_union(g1, g2));
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v)
            b.add_edge(u, g1.order() + v);
    return b.build();
}

Graph induced(const Graph &g, VertexSet s)
{
    s &= g.vertices();
    std::vector<int> keep = to_vector(s);
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

Graph remove_edge(const Graph &g, int i, int j)
{
    if (i < 0 || j < 0 || i >= g.order() || j >= g.order() || !g.adjacent(i, j))
        throw std::invalid_argument("remove_edge: {" + std::to_string(i) + "," + std::to_string(j) +
                                    "} is not an edge");
    return GraphBuilder(g).remove_edge(i, j).build();
}

Graph add_vertex(const Graph &g, VertexSet neighbourhood)
{
    GraphBuilder b(g);
    int added = b.add_vertex();
    for_each_vertex(neighbourhood & first_n(added), [&](int v) { b.add_edge(v, added); });
    return b.build();
}

Graph relabel(const Graph &g, std::span<const int> label)
{
    int n = g.order();
    if (static_cast<int>(label.size()) != n)
        throw std::invalid_argument("relabel: label size mismatch");
    VertexSet image = 0;
    for (int l : label)
        if (l >= 0 && l < n)
            image |= bit(l);
    if (image != g.vertices())
        throw std::invalid_argument("relabel: label is not a permutation");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for_each_vertex(g.neighbours(u) & ~first_n(u + 1), [&](int v) { b.add_edge(label[u], label[v]); });
    return b.build();
}

Invariants invariants(const Graph &g)
{
    return {clique_number(g), independence_number(g), chromatic_number(g)};
}

std::string describe(const Graph &g)
{
    std::ostringstream os;
    os << "Graph(n=" << g.order() << ", m=" << g.size() << ")";
    return os.str();
}

} // namespace qcc
