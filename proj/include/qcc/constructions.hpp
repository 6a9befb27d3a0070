#pragma once

#include <qcc/graph.hpp>
#include <qcc/qnc.hpp>
#include <qcc/rate.hpp>
#include <qcc/ramsey_search.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qcc {

class WitnessUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deletes edges in lexicographic order until the chromatic number equals
/// target. Each deletion lowers chi by at most one, so the scan lands on
/// target exactly. Throws std::domain_error when chi(g) < target.
Graph drop_edges_to_chromatic(const Graph &g, int target);

struct UpperWitness {
    Graph graph;
    int omega = 0;
    int chi = 0;
    /// The Ramsey graph the edges were dropped from.
    Graph source;
    std::string source_detail;
};

/// An n-vertex graph with chi = ceil(rn) and omega <= omega(n, floor(1/r)),
/// obtained from a Ramsey witness by dropping edges.
UpperWitness simple_upper_witness(const RationalRate &r, int n, const WitnessSearchOptions &options = {});

struct PieceSpec {
    /// 'L' pieces have independence at most k, 'M' pieces at most k+1.
    char family = 'L';
    int part = 0;
    int order = 0;
    int alpha_bound = 0;
    /// omega(order, alpha_bound); the piece should reach its upper end.
    ValueInterval omega_target;
};

struct JoinPlan {
    RationalRate r{1, 1};
    int n = 0;
    int k = 0;
    int c = 0;
    int l = 0;
    int m = 0;
    PartitionResult l_parts;
    PartitionResult m_parts;
    std::vector<PieceSpec> pieces;
};

/// k = floor(1/r), m = n - k*ceil(rn), l = (k+1)*ceil(rn) - n, and the
/// partitions minimising q(l,k) and q(m,k+1). Throws std::domain_error when
/// 1/r is an integer or m <= 0.
JoinPlan plan_join(const RationalRate &r, int n);

struct PieceCertificate {
    PieceSpec spec;
    Graph graph;
    int omega = 0;
    int alpha = 0;
    int chi = 0;
    /// omega reached omega_target.hi().
    bool optimal = false;
    std::string detail;
};

struct JoinResult {
    std::vector<PieceCertificate> pieces;
    Graph joined;
    int joined_omega = 0;
    int joined_chi = 0;
    /// After dropping edges down to chi = ceil(rn).
    Graph graph;
    int omega = 0;
    int chi = 0;
    /// q(l,k) + q(m,k+1).
    ValueInterval q_bound;
    /// Sum of piece clique numbers; equals q_bound.hi() when every piece is optimal.
    int certified_bound = 0;
    bool optimal_pieces = false;
};

struct JoinOptions {
    WitnessSearchOptions search;
    /// Fall back to a larger-clique piece instead of failing when no optimal piece is found.
    bool allow_suboptimal = true;
};

/// Joins one Ramsey graph per planned piece, then drops edges to chi = ceil(rn).
JoinResult join_construction(const JoinPlan &plan, const JoinOptions &options = {});

enum class RemovalMode { greedy, maximum };

struct RemovalResult {
    Graph remaining;
    VertexSet kept = 0;
    int removed = 0;
    std::vector<VertexSet> sets;
};

/// Largest number of pairwise disjoint independent (k+1)-sets, found by
/// backtracking; graphs up to this order only.
inline constexpr int kMaximumRemovalLimit = 9;

/// Removes disjoint independent (k+1)-sets until none is left, so the
/// remaining graph has alpha <= k. `maximum` removes a largest collection
/// (n <= kMaximumRemovalLimit); `greedy` repeatedly takes k+1 vertices of a
/// maximum independent set and carries no size guarantee.
RemovalResult greedy_remove_independent(const Graph &g, int k, RemovalMode mode = RemovalMode::greedy);

} // namespace qcc
