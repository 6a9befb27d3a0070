#pragma once

// Data-parallel sweeps over graph catalogs. Every kernel has a serial
// reference version; the OpenMP version must return identical results.

#include <qcc/graph.hpp>

#include <climits>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qcc::kernels {

void set_thread_count(int threads);
int thread_count();

/// Children of one canonical parent on n_parent vertices that are accepted by
/// the canonical-deletion test, deduplicated. Unsorted.
std::vector<std::uint64_t> extend_parent(int n_parent, std::uint64_t parent_code, std::optional<int> max_alpha);

/// Next level of the orderly generation, sorted ascending.
std::vector<std::uint64_t> extend_level_serial(int n_parent, std::span<const std::uint64_t> parents,
                                               std::optional<int> max_alpha);
std::vector<std::uint64_t> extend_level_parallel(int n_parent, std::span<const std::uint64_t> parents,
                                                 std::optional<int> max_alpha);

/// Minimising witness: smallest clique number, ties to the smallest code.
struct Best {
    int omega = INT_MAX;
    std::uint64_t code = UINT64_MAX;

    bool found() const { return omega != INT_MAX; }
    void merge(const Best &other);
    friend bool operator==(const Best &, const Best &) = default;
};

struct CatalogSummary {
    int n = 0;
    std::uint64_t count = 0;
    /// Indexed by chromatic number 0..n.
    std::vector<Best> by_chi;
    /// Indexed by exact independence number 0..n.
    std::vector<Best> by_alpha;

    friend bool operator==(const CatalogSummary &, const CatalogSummary &) = default;
};

CatalogSummary summarize_serial(int n, std::span<const std::uint64_t> codes);
CatalogSummary summarize_parallel(int n, std::span<const std::uint64_t> codes);

/// Best witness with chromatic number exactly c. Skips the colouring solver
/// for graphs that cannot beat the running best.
Best min_omega_with_chi_serial(int n, std::span<const std::uint64_t> codes, int c);
Best min_omega_with_chi_parallel(int n, std::span<const std::uint64_t> codes, int c);

} // namespace qcc::kernels
