#include <qcc/canon.hpp>
#include <qcc/enumerate.hpp>
#include <qcc/kernels.hpp>
#include <qcc/solvers.hpp>

#include <iostream>
#include <map>
#include <mutex>

namespace qcc {

namespace {

std::vector<std::uint64_t> generate(int n, std::optional<int> max_alpha)
{
    if (n == 0)
        return {0};
    std::vector<std::uint64_t> level{0};
    if (max_alpha && *max_alpha < 1)
        return {};
    for (int order = 1; order < n; ++order)
        level = kernels::extend_level_parallel(order, level, max_alpha);
    return level;
}

} // namespace

void validate(const EnumerationSpec &spec)
{
    if (spec.n < 0)
        throw std::invalid_argument("enumeration order must be non-negative");
    if (spec.n > spec.limit)
        throw CapacityError("enumeration of n=" + std::to_string(spec.n) + " exceeds the limit " +
                            std::to_string(spec.limit));
    if (spec.n > kMaxEnumerationLimit)
        throw CapacityError("enumeration above n=" + std::to_string(kMaxEnumerationLimit) + " is not supported");
}

const std::vector<std::uint64_t> &catalog(int n, int limit)
{
    validate(EnumerationSpec{n, std::nullopt, std::nullopt, limit});
    static std::mutex mutex;
    static std::map<int, std::vector<std::uint64_t>> levels;
    std::lock_guard lock(mutex);
    if (levels.empty()) {
        levels.emplace(0, std::vector<std::uint64_t>{0});
        levels.emplace(1, std::vector<std::uint64_t>{0});
    }
    if (auto it = levels.find(n); it != levels.end())
        return it->second;
    if (n > kDefaultEnumerationLimit)
        std::cerr << "warning: enumerating all graphs on " << n << " vertices (about 12M classes at n=10)\n";
    int have = levels.rbegin()->first;
    for (int order = have; order < n; ++order)
        levels.emplace(order + 1, kernels::extend_level_parallel(order, levels.at(order), std::nullopt));
    return levels.at(n);
}

const kernels::CatalogSummary &catalog_summary(int n, int limit)
{
    const auto &codes = catalog(n, limit);
    static std::mutex mutex;
    static std::map<int, kernels::CatalogSummary> summaries;
    std::lock_guard lock(mutex);
    if (auto it = summaries.find(n); it != summaries.end())
        return it->second;
    return summaries.emplace(n, kernels::summarize_parallel(n, codes)).first->second;
}

std::vector<std::uint64_t> enumerate_codes(const EnumerationSpec &spec)
{
    validate(spec);
    std::vector<std::uint64_t> codes =
        spec.max_alpha ? generate(spec.n, spec.max_alpha) : catalog(spec.n, spec.limit);
    if (spec.chromatic) {
        std::erase_if(codes, [&](std::uint64_t code) {
            return chromatic_number(graph_from_code(spec.n, code)) != *spec.chromatic;
        });
    }
    return codes;
}

std::vector<Graph> enumerate_graphs(const EnumerationSpec &spec)
{
    std::vector<Graph> out;
    for_each_graph(spec, [&](const Graph &g) { out.push_back(g); });
    return out;
}

void for_each_graph(const EnumerationSpec &spec, const std::function<void(const Graph &)> &fn)
{
    for (std::uint64_t code : enumerate_codes(spec))
        fn(graph_from_code(spec.n, code));
}

} // namespace qcc
