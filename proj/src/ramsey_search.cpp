#include <qcc/canon.hpp>
#include <qcc/graph6.hpp>
#include <qcc/ramsey.hpp>
#include <qcc/ramsey_search.hpp>
#include <qcc/solvers.hpp>

#include <array>
#include <chrono>
#include <climits>
#include <random>

namespace qcc {

std::pair<int, WitnessRecord> inverse_ramsey_bruteforce(int n, int k, int limit)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("inverse_ramsey_bruteforce: n and k must be positive");
    const kernels::CatalogSummary &summary = catalog_summary(n, limit);
    kernels::Best best;
    for (int a = 0; a <= std::min(k, n); ++a)
        best.merge(summary.by_alpha[a]);

    WitnessRecord record;
    record.kind = RecordKind::omega_nk;
    record.params = {n, k};
    record.value = ValueInterval(best.omega);
    record.witness_g6 = to_graph6(graph_from_code(n, best.code));
    record.method = Method::brute_force;
    return {best.omega, record};
}

const std::vector<SeedGraph> &seed_graphs()
{
    static const std::vector<SeedGraph> seeds = [] {
        const std::array<int, 2> wagner{1, 4};
        const std::array<int, 2> c13{1, 5};
        return std::vector<SeedGraph>{
            {"C5", Graph::cycle(5)},
            {"C8(1,4)", Graph::circulant(8, wagner)},
            {"C13(1,5)", Graph::circulant(13, c13)},
            {"Paley(13)", Graph::paley(13)},
            {"Paley(17)", Graph::paley(17)},
        };
    }();
    return seeds;
}

namespace {

using Clock = std::chrono::steady_clock;

// Disjoint union of min(k, n) cliques of near-equal size: alpha <= k and
// omega = ceil(n / k).
Graph clique_cover_graph(int n, int k)
{
    int parts = std::min(k, n);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % parts == v % parts)
                b.add_edge(u, v);
    return b.build();
}

class TabuSearch {
public:
    TabuSearch(int n, int k, int target, const WitnessSearchOptions &options)
        : n_(n), k_(k), target_(target), options_(options), rng_(options.seed), g_(n), comp_(n)
    {
    }

    std::optional<Graph> run()
    {
        const auto deadline =
            Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(options_.time_limit_seconds));
        const std::uint64_t restart_after =
            static_cast<std::uint64_t>(options_.restart_factor) * static_cast<std::uint64_t>(n_ * n_);
        randomise();
        std::int64_t best_energy = energy_;
        std::uint64_t stale = 0;
        std::uint64_t flips = 0;
        std::vector<std::pair<int, int>> moves;

        while (energy_ > 0) {
            if ((options_.max_flips && flips >= options_.max_flips) || Clock::now() >= deadline)
                return std::nullopt;
            std::int64_t best_delta = LLONG_MAX;
            moves.clear();
            for (int u = 0; u < n_; ++u) {
                for (int v = u + 1; v < n_; ++v) {
                    std::int64_t d = delta(u, v);
                    bool tabu = static_cast<std::int64_t>(flips) - last_flip_[u][v] < options_.tabu_tenure;
                    if (tabu && energy_ + d >= best_energy)
                        continue;
                    if (d < best_delta) {
                        best_delta = d;
                        moves.clear();
                    }
                    if (d == best_delta)
                        moves.emplace_back(u, v);
                }
            }
            if (moves.empty()) {
                std::uniform_int_distribution<int> pick(0, n_ - 1);
                int u = pick(rng_), v = pick(rng_);
                while (v == u)
                    v = pick(rng_);
                moves.emplace_back(std::min(u, v), std::max(u, v));
                best_delta = delta(moves[0].first, moves[0].second);
            }
            std::uniform_int_distribution<std::size_t> choose(0, moves.size() - 1);
            auto [u, v] = moves[choose(rng_)];
            g_.toggle_edge(u, v);
            comp_.toggle_edge(u, v);
            energy_ += best_delta;
            last_flip_[u][v] = static_cast<std::int64_t>(flips);
            ++flips;

            if (energy_ < best_energy) {
                best_energy = energy_;
                stale = 0;
            } else if (++stale > restart_after) {
                randomise();
                best_energy = energy_;
                stale = 0;
            }
        }
        return g_.build();
    }

private:
    void randomise()
    {
        std::bernoulli_distribution coin(0.5);
        g_ = GraphBuilder(n_);
        comp_ = GraphBuilder(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                (coin(rng_) ? g_ : comp_).add_edge(u, v);
        for (auto &row : last_flip_)
            row.fill(INT_MIN);
        energy_ = static_cast<std::int64_t>(count_cliques(comp_.view(), k_ + 1, comp_.view().vertices()) +
                                            count_cliques(g_.view(), target_ + 1, g_.view().vertices()));
    }

    // Energy change from flipping {u, v}: cliques of size target+1 and
    // independent sets of size k+1 through both endpoints.
    std::int64_t delta(int u, int v) const
    {
        auto cliques = static_cast<std::int64_t>(
            count_cliques(g_.view(), target_ - 1, g_.neighbours(u) & g_.neighbours(v)));
        auto independents = static_cast<std::int64_t>(
            count_cliques(comp_.view(), k_ - 1, comp_.neighbours(u) & comp_.neighbours(v)));
        return g_.adjacent(u, v) ? independents - cliques : cliques - independents;
    }

    int n_, k_, target_;
    const WitnessSearchOptions &options_;
    std::mt19937_64 rng_;
    GraphBuilder g_;
    GraphBuilder comp_;
    std::array<std::array<std::int64_t, kMaxVertices>, kMaxVertices> last_flip_{};
    std::int64_t energy_ = 0;
};

} // namespace

std::optional<Graph> tabu_ramsey_search(int n, int k, int target_omega, const WitnessSearchOptions &options)
{
    if (n < 2)
        return Graph(n);
    return TabuSearch(n, k, target_omega, options).run();
}

WitnessOutcome ramsey_witness(int n, int k, int target_omega, const WitnessSearchOptions &options)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("ramsey_witness: n and k must be positive");
    if (n > kMaxVertices)
        throw CapacityError("ramsey_witness: n exceeds capacity");

    ValueInterval bound = inverse_ramsey(n, k);
    if (target_omega < bound.lo())
        return {WitnessStatus::impossible, std::nullopt, Method::table,
                "omega(" + std::to_string(n) + "," + std::to_string(k) + ") >= " + std::to_string(bound.lo())};

    auto certified = [&](const Graph &g) {
        return g.order() == n && clique_number(g) <= target_omega && independence_number(g) <= k;
    };
    auto found = [&](const Graph &g, Method method, std::string detail) {
        if (options.store && method != Method::table) {
            WitnessRecord record;
            record.kind = RecordKind::ramsey_witness;
            record.params = {n, k, target_omega};
            record.value = ValueInterval(clique_number(g));
            record.witness_g6 = to_graph6(canonical_form(g));
            record.method = method;
            options.store->put(record);
        }
        return WitnessOutcome{WitnessStatus::found, g, method, std::move(detail)};
    };

    if (options.store) {
        const std::array<std::int64_t, 3> key{n, k, target_omega};
        if (auto record = options.store->get(RecordKind::ramsey_witness, key); record && record->witness_g6) {
            Graph g = from_graph6(*record->witness_g6);
            if (certify(*record).ok && certified(g))
                return {WitnessStatus::found, g, record->method, "cache"};
        }
    }

    for (const SeedGraph &seed : seed_graphs()) {
        if (seed.graph.order() < n)
            continue;
        Graph g = induced(seed.graph, first_n(n));
        if (certified(g))
            return found(g, Method::construction,
                         seed.graph.order() == n ? seed.name : "first " + std::to_string(n) + " vertices of " + seed.name);
    }
    if (Graph g = clique_cover_graph(n, k); certified(g))
        return found(g, Method::construction, "disjoint cliques");

    if (n <= options.brute_force_limit) {
        auto [omega, record] = inverse_ramsey_bruteforce(n, k, options.brute_force_limit);
        if (omega > target_omega)
            return {WitnessStatus::impossible, std::nullopt, Method::brute_force,
                    "exhaustive search gives omega(" + std::to_string(n) + "," + std::to_string(k) +
                        ") = " + std::to_string(omega)};
        return found(from_graph6(*record.witness_g6), Method::brute_force, "exhaustive search");
    }

    if (auto g = tabu_ramsey_search(n, k, target_omega, options); g && certified(*g))
        return found(*g, Method::local_search, "tabu search");

    return {WitnessStatus::unavailable, std::nullopt, Method::local_search, "search budget exhausted"};
}

} // namespace qcc
