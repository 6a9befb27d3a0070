#include <qcc/canon.hpp>
#include <qcc/graph6.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace qcc {

namespace {

using Perm = std::array<std::uint8_t, kMaxVertices>;

struct Partition {
    std::array<VertexSet, kMaxVertices> cells{};
    int count = 0;
};

// Adjacency bits in graph6 order, most significant first, for the labelling
// that puts vertex order[p] at position p.
struct Certificate {
    std::array<std::uint64_t, (kMaxVertices * (kMaxVertices - 1) / 2 + 63) / 64> words{};
    int used = 0;

    friend bool operator<(const Certificate &a, const Certificate &b)
    {
        return std::lexicographical_compare(a.words.begin(), a.words.begin() + a.used, b.words.begin(),
                                            b.words.begin() + b.used);
    }
    friend bool operator==(const Certificate &a, const Certificate &b)
    {
        return std::equal(a.words.begin(), a.words.begin() + a.used, b.words.begin());
    }
};

Certificate certificate(const Graph &g, const Perm &order)
{
    int n = g.order();
    Certificate cert;
    cert.used = (n * (n - 1) / 2 + 63) / 64;
    int b = 0;
    for (int j = 1; j < n; ++j) {
        VertexSet row = g.neighbours(order[j]);
        for (int i = 0; i < j; ++i, ++b)
            if ((row >> order[i]) & 1U)
                cert.words[b >> 6] |= std::uint64_t{1} << (63 - (b & 63));
    }
    return cert;
}

// Splits cells by neighbour counts into other cells until the partition is
// equitable. Every decision depends only on cell positions and counts, so the
// result is equivariant under relabelling.
void refine(const Graph &g, Partition &p)
{
    int n = g.order();
    bool changed = true;
    while (changed && p.count < n) {
        changed = false;
        for (int s = 0; s < p.count; ++s) {
            VertexSet splitter = p.cells[s];
            for (int x = 0; x < p.count; ++x) {
                VertexSet cell = p.cells[x];
                if (popcount(cell) == 1)
                    continue;
                int first = popcount(g.neighbours(lowest(cell)) & splitter);
                bool uniform = true;
                for_each_vertex(cell, [&](int v) {
                    if (popcount(g.neighbours(v) & splitter) != first)
                        uniform = false;
                });
                if (uniform)
                    continue;

                std::array<VertexSet, kMaxVertices + 1> bucket{};
                for_each_vertex(cell, [&](int v) { bucket[popcount(g.neighbours(v) & splitter)] |= bit(v); });
                std::array<VertexSet, kMaxVertices> pieces{};
                int k = 0;
                for (int c = 0; c <= n; ++c)
                    if (bucket[c])
                        pieces[k++] = bucket[c];

                std::copy_backward(p.cells.begin() + x + 1, p.cells.begin() + p.count,
                                   p.cells.begin() + p.count + k - 1);
                std::copy(pieces.begin(), pieces.begin() + k, p.cells.begin() + x);
                p.count += k - 1;
                changed = true;
                if (p.count == n)
                    return;
                splitter = p.cells[s];
            }
        }
    }
}

class DisjointSets {
public:
    explicit DisjointSets(int n) { std::iota(parent_.begin(), parent_.begin() + n, 0); }

    int find(int v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::array<int, kMaxVertices> parent_{};
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph &g) : g_(g), n_(g.order()) { add_twin_generators(); }

    void run()
    {
        Partition root;
        if (n_ > 0) {
            root.cells[0] = g_.vertices();
            root.count = 1;
        }
        search(root);
    }

    const Perm &best_order() const { return best_order_; }

    VertexSet orbit_of(int v) const
    {
        DisjointSets sets(n_);
        for (const Perm &a : autos_)
            for (int i = 0; i < n_; ++i)
                sets.unite(i, a[i]);
        VertexSet orbit = 0;
        int root = sets.find(v);
        for (int i = 0; i < n_; ++i)
            if (sets.find(i) == root)
                orbit |= bit(i);
        return orbit;
    }

private:
    static constexpr std::size_t kMaxStored = 256;

    // Twins u, v (same neighbourhood apart from each other) are swapped by an
    // automorphism fixing every other vertex.
    void add_twin_generators()
    {
        VertexSet assigned = 0;
        for (int u = 0; u < n_; ++u) {
            if (assigned & bit(u))
                continue;
            int prev = u;
            for (int v = u + 1; v < n_; ++v) {
                if (assigned & bit(v))
                    continue;
                VertexSet mask = ~(bit(u) | bit(v));
                if ((g_.neighbours(u) & mask) == (g_.neighbours(v) & mask)) {
                    Perm swap = identity();
                    std::swap(swap[prev], swap[v]);
                    autos_.push_back(swap);
                    assigned |= bit(v);
                    prev = v;
                }
            }
        }
    }

    Perm identity() const
    {
        Perm p{};
        for (int i = 0; i < n_; ++i)
            p[i] = static_cast<std::uint8_t>(i);
        return p;
    }

    bool fixes_path(const Perm &a) const
    {
        for (int d = 0; d < depth_; ++d)
            if (a[path_[d]] != path_[d])
                return false;
        return true;
    }

    void search(Partition p)
    {
        refine(g_, p);
        if (p.count == n_) {
            leaf(p);
            return;
        }
        int target = 0;
        while (popcount(p.cells[target]) == 1)
            ++target;
        VertexSet cell = p.cells[target];

        VertexSet explored = 0;
        std::size_t seen_autos = static_cast<std::size_t>(-1);
        DisjointSets sets(n_);
        for_each_vertex(cell, [&](int v) {
            if (explored) {
                if (seen_autos != autos_.size()) {
                    sets = DisjointSets(n_);
                    for (const Perm &a : autos_)
                        if (fixes_path(a))
                            for (int i = 0; i < n_; ++i)
                                sets.unite(i, a[i]);
                    seen_autos = autos_.size();
                }
                bool redundant = false;
                for_each_vertex(explored, [&](int u) {
                    if (sets.find(u) == sets.find(v))
                        redundant = true;
                });
                if (redundant)
                    return;
            }
            explored |= bit(v);

            Partition child = p;
            std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                               child.cells.begin() + child.count + 1);
            child.cells[target] = bit(v);
            child.cells[target + 1] = cell & ~bit(v);
            ++child.count;
            path_[depth_++] = static_cast<std::uint8_t>(v);
            search(child);
            --depth_;
        });
    }

    void leaf(const Partition &p)
    {
        Perm order{};
        for (int i = 0; i < n_; ++i)
            order[i] = static_cast<std::uint8_t>(lowest(p.cells[i]));
        Certificate cert = certificate(g_, order);
        if (!have_best_ || cert < best_cert_) {
            best_cert_ = cert;
            best_order_ = order;
            have_best_ = true;
        } else if (cert == best_cert_ && autos_.size() < kMaxStored) {
            Perm a = identity();
            for (int i = 0; i < n_; ++i)
                a[best_order_[i]] = order[i];
            autos_.push_back(a);
        }
    }

    const Graph &g_;
    int n_;
    std::vector<Perm> autos_;
    Perm path_{};
    int depth_ = 0;
    bool have_best_ = false;
    Certificate best_cert_;
    Perm best_order_{};
};

void check_code_order(int n)
{
    if (n > kMaxCodeOrder)
        throw CapacityError("packed graph codes support at most " + std::to_string(kMaxCodeOrder) +
                            " vertices");
}

} // namespace

CanonicalLabeling canonical_labeling(const Graph &g)
{
    int n = g.order();
    CanonSearch search(g);
    search.run();
    CanonicalLabeling out;
    out.order.resize(n);
    out.label.resize(n);
    for (int p = 0; p < n; ++p) {
        out.order[p] = search.best_order()[p];
        out.label[out.order[p]] = p;
    }
    out.form = relabel(g, out.label);
    if (n > 0)
        out.last_orbit = search.orbit_of(out.order.back());
    return out;
}

Graph canonical_form(const Graph &g) { return canonical_labeling(g).form; }

std::string canonical_graph6(const Graph &g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph &a, const Graph &b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::uint64_t graph_code(const Graph &g)
{
    int n = g.order();
    check_code_order(n);
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
    return code;
}

Graph graph_from_code(int n, std::uint64_t code)
{
    check_code_order(n);
    GraphBuilder b(n);
    int bits = n * (n - 1) / 2;
    int k = bits - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --k)
            if ((code >> k) & 1U)
                b.add_edge(i, j);
    return b.build();
}

std::uint64_t canonical_code(const Graph &g) { return graph_code(canonical_form(g)); }

} // namespace qcc
