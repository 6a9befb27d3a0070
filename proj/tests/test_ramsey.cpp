#include "oracles.hpp"

#include <qcc/canon.hpp>
#include <qcc/enumerate.hpp>
#include <qcc/graph6.hpp>
#include <qcc/ramsey.hpp>
#include <qcc/ramsey_search.hpp>
#include <qcc/solvers.hpp>

#include <doctest.h>

using namespace qcc;

TEST_CASE("interval arithmetic")
{
    ValueInterval a(3), b(5, 7), u = ValueInterval::at_least(4);
    CHECK((a + b) == ValueInterval(8, 10));
    CHECK_FALSE((a + u).bounded());
    CHECK((a + u).lo() == 7);
    CHECK(min(b, a) == ValueInterval(3));
    CHECK(min(b, u) == ValueInterval(4, 7));
    CHECK(a.str() == "[3,3]");
    CHECK(u.str() == "[4,inf)");
    CHECK_THROWS(ValueInterval(5, 4));
}

TEST_CASE("bundled table lookups")
{
    CHECK(ramsey_number(2, 6) == ValueInterval(6));
    CHECK(ramsey_number(6, 2) == ValueInterval(6));
    CHECK(ramsey_number(1, 9) == ValueInterval(1));
    CHECK(ramsey_number(3, 3) == ValueInterval(6));
    CHECK(ramsey_number(4, 3) == ValueInterval(9));
    CHECK(ramsey_number(5, 5) == ValueInterval(43, 48));
    CHECK(ramsey_number(3, 9) == ValueInterval(36));
    ValueInterval far = ramsey_number(7, 9);
    CHECK_FALSE(far.bounded());
    CHECK(RamseyTable::bundled().lookup(7, 9).source == "trivial");
    CHECK_FALSE(RamseyTable::bundled().lookup(3, 3).source.empty());
}

TEST_CASE("table is monotone in each argument")
{
    for (int s = 1; s <= 6; ++s)
        for (int t = 1; t <= 11; ++t) {
            ValueInterval here = ramsey_number(s, t), right = ramsey_number(s, t + 1), up = ramsey_number(s + 1, t);
            CHECK(here.lo() <= right.hi());
            CHECK(here.lo() <= up.hi());
        }
}

TEST_CASE("R(3,3) = 6 from the exhaustive catalog")
{
    auto avoids = [](const Graph &g) { return oracle::omega(g) < 3 && oracle::alpha(g) < 3; };
    bool five = false;
    for (std::uint64_t code : catalog(5))
        five = five || avoids(graph_from_code(5, code));
    bool six = false;
    for (std::uint64_t code : catalog(6))
        six = six || avoids(graph_from_code(6, code));
    CHECK(five);
    CHECK_FALSE(six);
}

TEST_CASE("table parsing")
{
    RamseyTable t = RamseyTable::parse("# comment\n3 3 6 6 somebody\n\n4 5 25 25 else\n3 10 40 42 bounds\n");
    CHECK(t.lookup(5, 4).value == ValueInterval(25));
    CHECK(t.lookup(10, 3).value == ValueInterval(40, 42));
    CHECK(t.lookup(3, 3).source == "somebody");
    CHECK_THROWS(RamseyTable::parse("3 3 6\n"));
    CHECK_THROWS(RamseyTable::parse("3 3 7 6 x\n"));
}

TEST_CASE("inverse Ramsey examples")
{
    CHECK(inverse_ramsey(5, 2) == ValueInterval(2));
    CHECK(inverse_ramsey(7, 2) == ValueInterval(3));
    for (int n = 1; n <= 12; ++n)
        CHECK(inverse_ramsey(n, n) == ValueInterval(1));
    CHECK(inverse_ramsey(20, 2) == ValueInterval(6));
    CHECK(inverse_ramsey(8, 2) == ValueInterval(3));
    CHECK(inverse_ramsey(12, 3) == ValueInterval(3));
    CHECK(inverse_ramsey(8, 4) == ValueInterval(2));
}

TEST_CASE("inverse Ramsey by brute force")
{
    auto [v, rec] = inverse_ramsey_bruteforce(5, 2);
    CHECK(v == 2);
    REQUIRE(rec.witness_g6.has_value());
    CHECK(isomorphic(from_graph6(*rec.witness_g6), Graph::cycle(5)));
    CHECK(certify(rec).ok);
    CHECK(inverse_ramsey_bruteforce(3, 2).first == 2);
    CHECK(inverse_ramsey_bruteforce(4, 4).first == 1);
}

TEST_CASE("table-derived omega(n,k) equals brute force up to 8 vertices")
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            ValueInterval t = inverse_ramsey(n, k);
            CHECK(t.exact());
            CHECK(t.lo() == inverse_ramsey_bruteforce(n, k).first);
        }
}

TEST_CASE("brute force against a direct oracle scan")
{
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            int best = n + 1;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
                Graph g = graph_from_code(n, code);
                if (oracle::alpha(g) <= k)
                    best = std::min(best, oracle::omega(g));
            }
            CHECK(inverse_ramsey_bruteforce(n, k).first == best);
        }
}

TEST_CASE("Ramsey witnesses")
{
    SUBCASE("C5")
    {
        WitnessOutcome w = ramsey_witness(5, 2, 2);
        REQUIRE(w.status == WitnessStatus::found);
        CHECK(isomorphic(*w.graph, Graph::cycle(5)));
    }
    SUBCASE("Paley 17")
    {
        WitnessOutcome w = ramsey_witness(17, 3, 3);
        REQUIRE(w.status == WitnessStatus::found);
        CHECK(isomorphic(*w.graph, Graph::paley(17)));
        CHECK(oracle::alpha(*w.graph) == 3);
    }
    SUBCASE("impossible")
    {
        CHECK(ramsey_witness(6, 2, 2).status == WitnessStatus::impossible);
        CHECK(ramsey_witness(18, 3, 3).status == WitnessStatus::impossible);
    }
    SUBCASE("every found witness certifies")
    {
        for (auto [n, k, t] : std::vector<std::tuple<int, int, int>>{
                 {8, 2, 3}, {13, 2, 4}, {16, 2, 5}, {20, 2, 6}, {12, 3, 3}, {11, 4, 2}, {8, 3, 2}}) {
            WitnessOutcome w = ramsey_witness(n, k, t);
            REQUIRE_MESSAGE(w.status == WitnessStatus::found, n << "," << k << "," << t << ": " << w.detail);
            CHECK(w.graph->order() == n);
            CHECK(independence_number(*w.graph) <= k);
            CHECK(clique_number(*w.graph) <= t);
        }
    }
}

TEST_CASE("tabu search finds small Ramsey graphs and is reproducible")
{
    WitnessSearchOptions o;
    o.seed = 42;
    o.time_limit_seconds = 20;
    auto a = tabu_ramsey_search(13, 2, 4, o);
    REQUIRE(a.has_value());
    CHECK(independence_number(*a) <= 2);
    CHECK(clique_number(*a) <= 4);
    auto w = tabu_ramsey_search(8, 3, 2, o);
    REQUIRE(w.has_value());
    CHECK(independence_number(*w) <= 3);
    CHECK(clique_number(*w) <= 2);
    auto b = tabu_ramsey_search(13, 2, 4, o);
    REQUIRE(b.has_value());
    CHECK(*a == *b);
}

TEST_CASE("witness records")
{
    WitnessRecord r{RecordKind::omega_nk, {5, 2}, ValueInterval(2), to_graph6(Graph::cycle(5)), Method::brute_force};
    CHECK(certify(r).ok);
    CHECK(record_from_json(to_json(r)) == r);

    WitnessRecord wrong_alpha = r;
    wrong_alpha.params = {5, 1};
    CHECK_FALSE(certify(wrong_alpha).ok);

    WitnessRecord wrong_omega = r;
    wrong_omega.value = ValueInterval(3);
    CHECK_FALSE(certify(wrong_omega).ok);

    WitnessRecord garbage = r;
    garbage.witness_g6 = "D~";
    CHECK_FALSE(certify(garbage).ok);

    WitnessRecord q{RecordKind::qnc, {5, 5}, ValueInterval(5), "D~{", Method::brute_force};
    CHECK(certify(q).ok);
    q.params = {5, 4};
    CHECK_FALSE(certify(q).ok);

    WitnessRecord unbounded{RecordKind::omega_nk, {60, 2}, ValueInterval::at_least(11), std::nullopt, Method::table};
    CHECK(record_from_json(to_json(unbounded)) == unbounded);
    CHECK(to_string(parse_method("local_search")) == "local_search");
    CHECK_THROWS(parse_record_kind("nope"));
}
