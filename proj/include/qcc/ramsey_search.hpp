#pragma once

#include <qcc/enumerate.hpp>
#include <qcc/graph.hpp>
#include <qcc/witness.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcc {

/// Exact omega(n,k) by scanning the isomorph-free catalog restricted to
/// alpha <= k. Ties go to the smallest canonical graph6 string.
std::pair<int, WitnessRecord> inverse_ramsey_bruteforce(int n, int k, int limit = kDefaultEnumerationLimit);

struct SeedGraph {
    std::string name;
    Graph graph;
};

/// Classical Ramsey colourings tried before any search: C5, the Wagner graph
/// C8(1,4), the circulant C13(1,5), and the Paley graphs on 13 and 17 vertices.
const std::vector<SeedGraph> &seed_graphs();

struct WitnessSearchOptions {
    std::uint64_t seed = 1;
    double time_limit_seconds = 60.0;
    /// A flipped pair stays tabu for this many moves.
    int tabu_tenure = 8;
    /// Restart from a fresh random graph after restart_factor * n^2 flips without improvement.
    int restart_factor = 10;
    /// 0 means bounded only by the time limit.
    std::uint64_t max_flips = 0;
    int brute_force_limit = kDefaultEnumerationLimit;
    RecordStore *store = nullptr;
};

enum class WitnessStatus { found, impossible, unavailable };

struct WitnessOutcome {
    WitnessStatus status = WitnessStatus::unavailable;
    std::optional<Graph> graph;
    Method method = Method::construction;
    std::string detail;
};

/// A certified graph with n vertices, alpha <= k and omega <= target_omega.
/// Tries, in order: the record store, seeded constructions, brute force
/// (n <= brute_force_limit), tabu search. Returns `impossible` when the
/// target is below the proven lower bound on omega(n,k).
WitnessOutcome ramsey_witness(int n, int k, int target_omega, const WitnessSearchOptions &options = {});

/// Tabu search over edge flips minimising the number of independent
/// (k+1)-sets plus cliques on target_omega+1 vertices. Uncertified.
std::optional<Graph> tabu_ramsey_search(int n, int k, int target_omega, const WitnessSearchOptions &options);

} // namespace qcc
