#include "oracles.hpp"

#include <qcc/canon.hpp>
#include <qcc/graph6.hpp>

#include <doctest.h>

#include <map>
#include <set>

using namespace qcc;

TEST_CASE("canonical form is a relabelling of the input")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracle::random_graph(n, 0.5, rng);
        CanonicalLabeling cl = canonical_labeling(g);
        CHECK(relabel(g, cl.label) == cl.form);
        for (int p = 0; p < n; ++p)
            CHECK(cl.label[cl.order[p]] == p);
        CHECK((cl.last_orbit & bit(cl.order.back())) != 0);
    }
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        double p = (rng() % 3 == 0) ? 0.1 : 0.5;
        Graph g = oracle::random_graph(n, p, rng);
        Graph h = oracle::random_relabel(g, rng);
        CHECK(canonical_graph6(g) == canonical_graph6(h));
        CHECK(isomorphic(g, h));
    }
}

TEST_CASE("highly symmetric graphs")
{
    std::mt19937_64 rng(3);
    std::vector<Graph> graphs{Graph::petersen(),      Graph::paley(13),  Graph::paley(17),
                              Graph::cycle(20),       Graph::complete(9), Graph(9),
                              join(Graph::cycle(5), Graph::cycle(5)),
                              disjoint_union(Graph::cycle(4), Graph::cycle(4))};
    for (const Graph &g : graphs)
        for (int trial = 0; trial < 5; ++trial)
            CHECK(canonical_graph6(oracle::random_relabel(g, rng)) == canonical_graph6(g));
    CHECK_FALSE(isomorphic(Graph::cycle(6), disjoint_union(Graph::cycle(3), Graph::cycle(3))));
}

TEST_CASE("canonical form separates exactly the classes of the brute-force oracle")
{
    // Every graph on 5 vertices, and a random sample on 6.
    std::map<std::string, std::string> ours_to_oracle, oracle_to_ours;
    auto record = [&](const Graph &g) {
        std::string ours = canonical_graph6(g), theirs = oracle::brute_canon(g);
        auto [a, ia] = ours_to_oracle.emplace(ours, theirs);
        auto [b, ib] = oracle_to_ours.emplace(theirs, ours);
        CHECK(a->second == theirs);
        CHECK(b->second == ours);
    };
    for (std::uint64_t code = 0; code < (1u << 10); ++code)
        record(graph_from_code(5, code));
    CHECK(ours_to_oracle.size() == 34);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 3000; ++trial)
        record(graph_from_code(6, rng() % (1u << 15)));
}

TEST_CASE("packed codes follow graph6 order")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % (kMaxCodeOrder - 1));
        Graph a = oracle::random_graph(n, 0.5, rng), b = oracle::random_graph(n, 0.5, rng);
        CHECK(graph_from_code(n, graph_code(a)) == a);
        CHECK((graph_code(a) < graph_code(b)) == (to_graph6(a) < to_graph6(b)));
        CHECK(graph_from_code(n, canonical_code(a)) == canonical_form(a));
    }
    CHECK_THROWS(graph_code(Graph(12)));
}
