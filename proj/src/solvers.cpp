#include <qcc/solvers.hpp>

#include <algorithm>
#include <array>

namespace qcc {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph &g, int stop_at) : g_(g), stop_at_(stop_at) {}

    void run(VertexSet candidates)
    {
        if (candidates)
            expand(candidates, 0, 0);
    }

    int best_size = 0;
    VertexSet best = 0;

private:
    // Sequential greedy colouring of P; order[i] carries an upper bound bound[i]
    // on the clique size achievable within order[0..i].
    int colour_sort(VertexSet p, std::array<int, kMaxVertices> &order,
                    std::array<int, kMaxVertices> &bound) const
    {
        int count = 0;
        int colour = 0;
        VertexSet uncoloured = p;
        while (uncoloured) {
            ++colour;
            VertexSet q = uncoloured;
            while (q) {
                int v = lowest(q);
                q &= ~bit(v);
                q &= ~g_.neighbours(v);
                uncoloured &= ~bit(v);
                order[count] = v;
                bound[count] = colour;
                ++count;
            }
        }
        return count;
    }

    void expand(VertexSet p, VertexSet current, int size)
    {
        std::array<int, kMaxVertices> order;
        std::array<int, kMaxVertices> bound;
        int count = colour_sort(p, order, bound);
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best_size || best_size >= stop_at_)
                return;
            int v = order[i];
            VertexSet next = p & g_.neighbours(v);
            if (!next) {
                if (size + 1 > best_size) {
                    best_size = size + 1;
                    best = current | bit(v);
                }
            } else {
                expand(next, current | bit(v), size + 1);
            }
            p &= ~bit(v);
        }
    }

    const Graph &g_;
    int stop_at_;
};

class ColouringSearch {
public:
    explicit ColouringSearch(const Graph &g) : g_(g), n_(g.order()) {}

    // Looks for a proper colouring with fewer than `limit` colours. With
    // stop_at_first the first one found is kept; otherwise the search keeps
    // tightening `limit` until it reaches `lower`.
    bool run(int limit, int lower, bool stop_at_first)
    {
        limit_ = limit;
        lower_ = lower;
        stop_at_first_ = stop_at_first;
        found_ = false;
        colour_.fill(-1);
        sat_.fill(0);
        uncoloured_ = g_.vertices();

        VertexSet clique = maximum_clique(g_);
        int used = 0;
        for_each_vertex(clique, [&](int v) { assign(v, used++); });
        if (used >= limit_)
            return false;
        search(used);
        return found_;
    }

    std::vector<int> best() const { return best_; }

private:
    VertexSet assign(int v, int c)
    {
        colour_[v] = c;
        uncoloured_ &= ~bit(v);
        VertexSet changed = 0;
        for_each_vertex(g_.neighbours(v) & uncoloured_, [&](int u) {
            if (!(sat_[u] & bit(c))) {
                sat_[u] |= bit(c);
                changed |= bit(u);
            }
        });
        return changed;
    }

    void unassign(int v, int c, VertexSet changed)
    {
        for_each_vertex(changed, [&](int u) { sat_[u] &= ~bit(c); });
        colour_[v] = -1;
        uncoloured_ |= bit(v);
    }

    int pick() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for_each_vertex(uncoloured_, [&](int u) {
            int s = popcount(sat_[u]);
            int d = popcount(g_.neighbours(u) & uncoloured_);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = u;
                best_sat = s;
                best_deg = d;
            }
        });
        return best;
    }

    bool done() const { return limit_ <= lower_ || (stop_at_first_ && found_); }

    void search(int used)
    {
        if (!uncoloured_) {
            best_.assign(colour_.begin(), colour_.begin() + n_);
            limit_ = used;
            found_ = true;
            return;
        }
        int v = pick();
        // Existing colours, or one new colour while it stays below the limit.
        int max_colour = std::min(used, limit_ - 2);
        for (int c = 0; c <= max_colour; ++c) {
            if (sat_[v] & bit(c))
                continue;
            VertexSet changed = assign(v, c);
            search(std::max(used, c + 1));
            unassign(v, c, changed);
            if (done())
                return;
            max_colour = std::min(used, limit_ - 2);
        }
    }

    const Graph &g_;
    int n_;
    std::array<int, kMaxVertices> colour_{};
    std::array<VertexSet, kMaxVertices> sat_{};
    VertexSet uncoloured_ = 0;
    int limit_ = 0;
    int lower_ = 0;
    bool stop_at_first_ = false;
    bool found_ = false;
    std::vector<int> best_;
};

} // namespace

VertexSet maximum_clique(const Graph &g)
{
    CliqueSearch search(g, kMaxVertices + 1);
    search.run(g.vertices());
    return search.best;
}

int clique_number(const Graph &g) { return popcount(maximum_clique(g)); }

int clique_number_within(const Graph &g, VertexSet candidates)
{
    CliqueSearch search(g, kMaxVertices + 1);
    search.run(candidates & g.vertices());
    return search.best_size;
}

VertexSet maximum_clique_within(const Graph &g, VertexSet candidates)
{
    CliqueSearch search(g, kMaxVertices + 1);
    search.run(candidates & g.vertices());
    return search.best;
}

bool has_clique(const Graph &g, int size)
{
    if (size <= 0)
        return true;
    CliqueSearch search(g, size);
    search.best_size = size - 1;
    search.run(g.vertices());
    return search.best_size >= size && search.best != 0;
}

int independence_number(const Graph &g) { return clique_number(complement(g)); }

VertexSet maximum_independent_set(const Graph &g) { return maximum_clique(complement(g)); }

std::uint64_t count_cliques(const Graph &g, int size, VertexSet candidates)
{
    if (size <= 0)
        return 1;
    if (popcount(candidates) < size)
        return 0;
    if (size == 1)
        return static_cast<std::uint64_t>(popcount(candidates));
    std::uint64_t total = 0;
    VertexSet rest = candidates;
    while (popcount(rest) >= size) {
        int v = lowest(rest);
        rest &= ~bit(v);
        total += count_cliques(g, size - 1, rest & g.neighbours(v));
    }
    return total;
}

std::vector<int> dsatur_colouring(const Graph &g)
{
    int n = g.order();
    std::vector<int> colour(n, -1);
    std::array<VertexSet, kMaxVertices> sat{};
    VertexSet uncoloured = g.vertices();
    while (uncoloured) {
        int best = -1, best_sat = -1, best_deg = -1;
        for_each_vertex(uncoloured, [&](int u) {
            int s = popcount(sat[u]);
            int d = popcount(g.neighbours(u) & uncoloured);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = u;
                best_sat = s;
                best_deg = d;
            }
        });
        int c = lowest(~sat[best]);
        colour[best] = c;
        uncoloured &= ~bit(best);
        for_each_vertex(g.neighbours(best), [&](int u) { sat[u] |= bit(c); });
    }
    return colour;
}

int colours_used(const std::vector<int> &colour)
{
    int top = -1;
    for (int c : colour)
        top = std::max(top, c);
    return top + 1;
}

bool is_proper_colouring(const Graph &g, const std::vector<int> &colour)
{
    if (static_cast<int>(colour.size()) != g.order())
        return false;
    for (int c : colour)
        if (c < 0)
            return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            return false;
    return true;
}

std::vector<int> optimal_colouring(const Graph &g)
{
    std::vector<int> greedy = dsatur_colouring(g);
    int upper = colours_used(greedy);
    int lower = clique_number(g);
    if (upper <= lower)
        return greedy;
    ColouringSearch search(g);
    if (search.run(upper, lower, false))
        return search.best();
    return greedy;
}

int chromatic_number(const Graph &g) { return colours_used(optimal_colouring(g)); }

std::optional<std::vector<int>> find_colouring(const Graph &g, int colours)
{
    if (g.order() == 0)
        return std::vector<int>{};
    if (colours <= 0)
        return std::nullopt;
    std::vector<int> greedy = dsatur_colouring(g);
    if (colours_used(greedy) <= colours)
        return greedy;
    if (has_clique(g, colours + 1))
        return std::nullopt;
    ColouringSearch search(g);
    if (search.run(colours + 1, 0, true))
        return search.best();
    return std::nullopt;
}

} // namespace qcc
