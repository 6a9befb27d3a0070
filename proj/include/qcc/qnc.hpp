#pragma once

#include <qcc/enumerate.hpp>
#include <qcc/interval.hpp>
#include <qcc/witness.hpp>

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qcc {

/// Exact Q(n,c), the least clique number over n-vertex graphs with chromatic
/// number c, by scanning the isomorph-free catalog.
std::pair<int, WitnessRecord> qnc_bruteforce(int n, int c, int limit = kDefaultEnumerationLimit);

struct QncRow {
    int c = 0;
    int q = 0;
    std::uint64_t witness_code = 0;
};

/// Q(n,c) for every c in 1..n from one sweep of catalog(n).
std::vector<QncRow> qnc_table(int n, int limit = kDefaultEnumerationLimit);

/// A minimum together with the partition attaining it. Parts are listed in
/// nonincreasing order. Partitions are scanned in lexicographically
/// decreasing order ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]); among minimisers
/// the first one with the smallest upper end, then smallest lower end, wins.
struct PartitionResult {
    ValueInterval value;
    std::vector<int> partition;
};

/// q(k) = min over k = k_1 + ... + k_s, s <= 3, of sum(omega(2k_i + 1, 2) - 1).
PartitionResult q_small(int k);

/// Q(n, n-k) = n - 2k + q(k), valid for n >= 2k + 3. Throws std::domain_error otherwise.
ValueInterval qnc_formula(int n, int k);

/// q(beta, alpha) = min over beta = beta_1 + ... of sum(omega(alpha * beta_i, alpha)).
PartitionResult q_general(int beta, int alpha);

/// Visits every partition of total into at most max_parts parts (0 = unbounded)
/// in lexicographically decreasing order.
void for_each_partition(int total, int max_parts, const std::function<void(const std::vector<int> &)> &fn);

} // namespace qcc
