#pragma once

#include <qcc/graph.hpp>
#include <qcc/kernels.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace qcc {

inline constexpr int kDefaultEnumerationLimit = 9;
/// Above the default limit the catalog grows to ~12M classes at n = 10.
inline constexpr int kMaxEnumerationLimit = 10;

struct EnumerationSpec {
    int n = 0;
    /// Keep only graphs with independence number at most this.
    std::optional<int> max_alpha;
    /// Keep only graphs with exactly this chromatic number.
    std::optional<int> chromatic;
    int limit = kDefaultEnumerationLimit;
};

/// Throws CapacityError when spec.n exceeds spec.limit or the hard cap.
void validate(const EnumerationSpec &spec);

/// One canonical code (see canon.hpp) per isomorphism class passing the
/// filters, ascending. Orderly generation by canonical vertex augmentation.
std::vector<std::uint64_t> enumerate_codes(const EnumerationSpec &spec);

/// Decoded form of enumerate_codes; intended for small n.
std::vector<Graph> enumerate_graphs(const EnumerationSpec &spec);

/// Calls fn for each graph of enumerate_codes(spec), in order.
void for_each_graph(const EnumerationSpec &spec, const std::function<void(const Graph &)> &fn);

/// Unfiltered catalog of n-vertex graphs, memoised for the process lifetime.
const std::vector<std::uint64_t> &catalog(int n, int limit = kDefaultEnumerationLimit);

/// Per-chromatic-number and per-independence-number minimum clique witnesses
/// over catalog(n), memoised.
const kernels::CatalogSummary &catalog_summary(int n, int limit = kDefaultEnumerationLimit);

} // namespace qcc
