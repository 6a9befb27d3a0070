#include <qcc/canon.hpp>
#include <qcc/kernels.hpp>
#include <qcc/solvers.hpp>

#include <algorithm>

#include <omp.h>

namespace qcc::kernels {

void set_thread_count(int threads)
{
    if (threads > 0)
        omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

void Best::merge(const Best &other)
{
    if (other.omega < omega || (other.omega == omega && other.code < code)) {
        omega = other.omega;
        code = other.code;
    }
}

std::vector<std::uint64_t> extend_parent(int n_parent, std::uint64_t parent_code, std::optional<int> max_alpha)
{
    const Graph parent = graph_from_code(n_parent, parent_code);
    const int added = n_parent;
    std::vector<std::uint64_t> accepted;
    for (VertexSet nbhd = 0; nbhd < bit(n_parent); ++nbhd) {
        Graph child = add_vertex(parent, nbhd);
        if (max_alpha && independence_number(child) > *max_alpha)
            continue;
        CanonicalLabeling canon = canonical_labeling(child);
        // Accept only when deleting the canonically last vertex gives back
        // the parent's class.
        int last = canon.order.back();
        if (last != added && !(canon.last_orbit & bit(added))) {
            if (child.degree(last) != child.degree(added))
                continue;
            if (canonical_code(induced(child, ~bit(last))) != parent_code)
                continue;
        }
        std::uint64_t code = graph_code(canon.form);
        if (std::find(accepted.begin(), accepted.end(), code) == accepted.end())
            accepted.push_back(code);
    }
    return accepted;
}

std::vector<std::uint64_t> extend_level_serial(int n_parent, std::span<const std::uint64_t> parents,
                                               std::optional<int> max_alpha)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t parent : parents) {
        auto children = extend_parent(n_parent, parent, max_alpha);
        out.insert(out.end(), children.begin(), children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> extend_level_parallel(int n_parent, std::span<const std::uint64_t> parents,
                                                 std::optional<int> max_alpha)
{
    std::vector<std::uint64_t> out;
    const auto count = static_cast<std::int64_t>(parents.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            auto children = extend_parent(n_parent, parents[i], max_alpha);
            local.insert(local.end(), children.begin(), children.end());
        }
#pragma omp critical(qcc_extend_merge)
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

CatalogSummary empty_summary(int n)
{
    CatalogSummary s;
    s.n = n;
    s.by_chi.resize(n + 1);
    s.by_alpha.resize(n + 1);
    return s;
}

void accumulate(CatalogSummary &s, std::uint64_t code)
{
    Graph g = graph_from_code(s.n, code);
    Invariants inv = invariants(g);
    Best here{inv.omega, code};
    s.by_chi[inv.chi].merge(here);
    s.by_alpha[inv.alpha].merge(here);
    ++s.count;
}

void merge_into(CatalogSummary &into, const CatalogSummary &from)
{
    into.count += from.count;
    for (std::size_t i = 0; i < into.by_chi.size(); ++i) {
        into.by_chi[i].merge(from.by_chi[i]);
        into.by_alpha[i].merge(from.by_alpha[i]);
    }
}

void consider_for_chi(Best &best, int n, std::uint64_t code, int c)
{
    Graph g = graph_from_code(n, code);
    int omega = clique_number(g);
    if (omega > c)
        return;
    if (omega > best.omega || (omega == best.omega && code > best.code))
        return;
    if (chromatic_number(g) == c)
        best.merge(Best{omega, code});
}

} // namespace

CatalogSummary summarize_serial(int n, std::span<const std::uint64_t> codes)
{
    CatalogSummary s = empty_summary(n);
    for (std::uint64_t code : codes)
        accumulate(s, code);
    return s;
}

CatalogSummary summarize_parallel(int n, std::span<const std::uint64_t> codes)
{
    CatalogSummary total = empty_summary(n);
    const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel
    {
        CatalogSummary local = empty_summary(n);
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t i = 0; i < count; ++i)
            accumulate(local, codes[i]);
#pragma omp critical(qcc_summary_merge)
        merge_into(total, local);
    }
    return total;
}

Best min_omega_with_chi_serial(int n, std::span<const std::uint64_t> codes, int c)
{
    Best best;
    for (std::uint64_t code : codes)
        consider_for_chi(best, n, code, c);
    return best;
}

Best min_omega_with_chi_parallel(int n, std::span<const std::uint64_t> codes, int c)
{
    Best total;
    const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel
    {
        Best local;
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t i = 0; i < count; ++i)
            consider_for_chi(local, n, codes[i], c);
#pragma omp critical(qcc_chi_merge)
        total.merge(local);
    }
    return total;
}

} // namespace qcc::kernels
