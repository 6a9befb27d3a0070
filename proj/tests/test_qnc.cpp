#include "oracles.hpp"

#include <qcc/canon.hpp>
#include <qcc/enumerate.hpp>
#include <qcc/graph6.hpp>
#include <qcc/qnc.hpp>
#include <qcc/ramsey.hpp>
#include <qcc/solvers.hpp>

#include <doctest.h>

using namespace qcc;

TEST_CASE("Q(n,c) small examples")
{
    for (int n = 1; n <= 7; ++n) {
        auto [q, rec] = qnc_bruteforce(n, n);
        CHECK(q == n);
        CHECK(from_graph6(*rec.witness_g6) == Graph::complete(n));
        CHECK(qnc_bruteforce(n, 1).first == 1);
    }
    CHECK(qnc_bruteforce(5, 4).first == 4);
    CHECK(to_graph6(Graph::complete(5)) == *qnc_bruteforce(5, 5).second.witness_g6);
}

TEST_CASE("Q(n,c) against a direct oracle scan")
{
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> best(n + 1, n + 1);
        for (std::uint64_t code : catalog(n)) {
            Graph g = graph_from_code(n, code);
            int c = oracle::chi(g);
            best[c] = std::min(best[c], oracle::omega(g));
        }
        auto table = qnc_table(n);
        REQUIRE(table.size() == static_cast<std::size_t>(n));
        for (int c = 1; c <= n; ++c) {
            CHECK(table[c - 1].c == c);
            CHECK(table[c - 1].q == best[c]);
            CHECK(qnc_bruteforce(n, c).first == best[c]);
        }
    }
}

TEST_CASE("Q witnesses certify")
{
    for (int n = 2; n <= 8; ++n)
        for (int c = 1; c <= n; ++c) {
            auto [q, rec] = qnc_bruteforce(n, c);
            CHECK(certify(rec).ok);
            Graph g = from_graph6(*rec.witness_g6);
            CHECK(chromatic_number(g) == c);
            CHECK(clique_number(g) == q);
        }
    CHECK_THROWS(qnc_bruteforce(5, 6));
    CHECK_THROWS_AS(qnc_bruteforce(10, 3), CapacityError);
}

TEST_CASE("partitions")
{
    std::vector<std::vector<int>> seen;
    for_each_partition(4, 0, [&](const std::vector<int> &p) { seen.push_back(p); });
    CHECK(seen == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    seen.clear();
    for_each_partition(5, 2, [&](const std::vector<int> &p) { seen.push_back(p); });
    CHECK(seen == std::vector<std::vector<int>>{{5}, {4, 1}, {3, 2}});
    int count = 0;
    for_each_partition(12, 0, [&](const std::vector<int> &) { ++count; });
    CHECK(count == 77);
}

TEST_CASE("q(k)")
{
    CHECK(q_small(1).value == ValueInterval(1));
    CHECK(q_small(1).partition == std::vector<int>{1});
    CHECK(q_small(2).value == ValueInterval(1));
    CHECK(q_small(2).partition == std::vector<int>{2});
    CHECK(q_small(3).value == ValueInterval(2));
    CHECK(q_small(3).partition == std::vector<int>{3});

    // Direct oracle from the exact inverse Ramsey values.
    for (int k = 1; k <= 4; ++k) {
        std::int64_t best = 1 << 20;
        for (int a = 1; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b) {
                int c = k - a - b;
                auto term = [](int p) { return p == 0 ? 0 : inverse_ramsey(2 * p + 1, 2).lo() - 1; };
                best = std::min(best, term(a) + term(b) + term(c));
            }
        CHECK(q_small(k).value == ValueInterval(best));
    }
    for (int k = 1; k <= 8; ++k) {
        PartitionResult r = q_small(k);
        CHECK(r.partition.size() <= 3);
        int sum = 0;
        for (int p : r.partition)
            sum += p;
        CHECK(sum == k);
        CHECK(std::is_sorted(r.partition.rbegin(), r.partition.rend()));
    }
}

TEST_CASE("Q(n,n-k) formula")
{
    CHECK(qnc_formula(5, 1) == ValueInterval(4));
    CHECK(qnc_formula(9, 3) == ValueInterval(5));
    CHECK_THROWS_AS(qnc_formula(6, 2), std::domain_error);
    for (int n = 5; n <= 8; ++n)
        for (int k = 1; 2 * k + 3 <= n; ++k)
            CHECK(qnc_formula(n, k) == ValueInterval(qnc_bruteforce(n, n - k).first));
}

TEST_CASE("q(beta, alpha)")
{
    CHECK(q_general(1, 2).value == ValueInterval(1));
    CHECK(q_general(4, 2).value == ValueInterval(3));
    CHECK(q_general(4, 2).partition == std::vector<int>{4});
    CHECK(q_general(4, 3).value == ValueInterval(3));
    CHECK(q_general(4, 3).partition == std::vector<int>{4});
    CHECK(q_general(2, 4).value == ValueInterval(2));

    for (int alpha = 1; alpha <= 4; ++alpha)
        for (int beta = 1; beta <= 6; ++beta) {
            ValueInterval whole = inverse_ramsey(alpha * beta, alpha);
            PartitionResult r = q_general(beta, alpha);
            if (whole.exact() && r.value.exact())
                CHECK(r.value.lo() <= whole.lo());
            ValueInterval sum(0);
            for (int p : r.partition)
                sum = sum + inverse_ramsey(alpha * p, alpha);
            CHECK(sum.hi() == r.value.hi());
        }
}
