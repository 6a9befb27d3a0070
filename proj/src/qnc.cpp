#include <qcc/canon.hpp>
#include <qcc/graph6.hpp>
#include <qcc/kernels.hpp>
#include <qcc/qnc.hpp>
#include <qcc/ramsey.hpp>

#include <cassert>
#include <map>

namespace qcc {

std::pair<int, WitnessRecord> qnc_bruteforce(int n, int c, int limit)
{
    if (c < 1 || c > n)
        throw std::invalid_argument("qnc_bruteforce: need 1 <= c <= n");
    const auto &codes = catalog(n, limit);
    kernels::Best best = kernels::min_omega_with_chi_parallel(n, codes, c);
    assert(best.found());

    WitnessRecord record;
    record.kind = RecordKind::qnc;
    record.params = {n, c};
    record.value = ValueInterval(best.omega);
    record.witness_g6 = to_graph6(graph_from_code(n, best.code));
    record.method = Method::brute_force;
    return {best.omega, record};
}

std::vector<QncRow> qnc_table(int n, int limit)
{
    const kernels::CatalogSummary &summary = catalog_summary(n, limit);
    std::vector<QncRow> rows;
    for (int c = 1; c <= n; ++c) {
        const kernels::Best &best = summary.by_chi[c];
        assert(best.found());
        rows.push_back({c, best.omega, best.code});
    }
    return rows;
}

void for_each_partition(int total, int max_parts, const std::function<void(const std::vector<int> &)> &fn)
{
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            fn(parts);
            return;
        }
        if (max_parts > 0 && static_cast<int>(parts.size()) == max_parts)
            return;
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    if (total > 0)
        rec(total, total);
}

namespace {

template <typename Term>
PartitionResult minimise_over_partitions(int total, int max_parts, Term term)
{
    std::map<int, ValueInterval> memo;
    auto cached = [&](int part) {
        auto it = memo.find(part);
        if (it == memo.end())
            it = memo.emplace(part, term(part)).first;
        return it->second;
    };

    PartitionResult best;
    ValueInterval chosen;
    bool have = false;
    for_each_partition(total, max_parts, [&](const std::vector<int> &parts) {
        ValueInterval sum(0);
        for (int p : parts)
            sum = sum + cached(p);
        if (!have) {
            best = {sum, parts};
            chosen = sum;
            have = true;
            return;
        }
        best.value = min(best.value, sum);
        if (sum.hi() < chosen.hi() || (sum.hi() == chosen.hi() && sum.lo() < chosen.lo())) {
            best.partition = parts;
            chosen = sum;
        }
    });
    return best;
}

} // namespace

PartitionResult q_small(int k)
{
    if (k < 1)
        throw std::invalid_argument("q_small: k must be positive");
    return minimise_over_partitions(k, 3, [](int part) {
        ValueInterval w = inverse_ramsey(2 * part + 1, 2);
        return ValueInterval(w.lo() - 1, w.bounded() ? w.hi() - 1 : ValueInterval::kUnbounded);
    });
}

ValueInterval qnc_formula(int n, int k)
{
    if (k < 1)
        throw std::invalid_argument("qnc_formula: k must be positive");
    if (n < 2 * k + 3)
        throw std::domain_error("qnc_formula: requires n >= 2k+3 (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
    return ValueInterval(n - 2 * k) + q_small(k).value;
}

PartitionResult q_general(int beta, int alpha)
{
    if (beta < 1 || alpha < 1)
        throw std::invalid_argument("q_general: beta and alpha must be positive");
    return minimise_over_partitions(beta, 0, [alpha](int part) { return inverse_ramsey(alpha * part, alpha); });
}

} // namespace qcc
