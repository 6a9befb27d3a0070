#include "cli.hpp"

#include <qcc/canon.hpp>
#include <qcc/graph.hpp>
#include <qcc/graph6.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = qcc::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name)
{
    return fs::temp_directory_path() / ("qcc-cli-test-" + std::to_string(::getpid()) + "-" + name);
}

} // namespace

TEST_CASE("qnc prints K5 for n = c = 5")
{
    Run r = run({"qnc", "--n", "5", "--c", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\nwitness: D~{\n");
    Run g6 = run({"qnc", "--n", "5", "--c", "5", "--format", "g6"});
    CHECK(g6.out == "D~{\n");
}

TEST_CASE("omega by brute force gives C5")
{
    Run r = run({"omega", "--n", "5", "--k", "2", "--brute", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["lo"] == 2);
    CHECK(j["value"]["exact"] == true);
    CHECK(qcc::isomorphic(qcc::from_graph6(j["witness"].get<std::string>()), qcc::Graph::cycle(5)));
}

TEST_CASE("ramsey")
{
    Run r = run({"ramsey", "--s", "3", "--t", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("[6,6] exact\n", 0) == 0);
    Run b = run({"ramsey", "--s", "5", "--t", "5"});
    CHECK(b.out.rfind("[43,48] bounds\n", 0) == 0);
    Run csv = run({"--format", "csv", "ramsey", "--s", "4", "--t", "6"});
    CHECK(csv.out.rfind("s,t,value,source\n4,6,\"[36,41]\",", 0) == 0);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"qnc", "--n", "5"}).code == 2);
    CHECK(run({"qnc", "--n", "5", "--c", "6"}).code == 2);
    CHECK(run({"qnc", "--n", "12", "--c", "3"}).code == 2);
    CHECK(run({"--format", "xml", "ramsey", "--s", "3", "--t", "3"}).code == 2);
    CHECK(run({"qnc", "--n", "6", "--c", "4", "--method", "formula"}).code == 2);
    Run dec = run({"construct", "--r", "0.4", "--n", "10"});
    CHECK(dec.code == 2);
    CHECK(dec.err.find("P/Q") != std::string::npos);
    CHECK(run({"construct", "--r", "1/3", "--n", "12", "--kind", "join"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("g6 format without a witness exits with 1")
{
    Run r = run({"qsmall", "--k", "3", "--format", "g6"});
    CHECK(r.code == 1);
}

TEST_CASE("partition commands")
{
    CHECK(run({"qsmall", "--k", "3"}).out == "2\npartition: [3]\n");
    CHECK(run({"qgen", "--beta", "4", "--alpha", "2"}).out == "3\npartition: [4]\n");
    CHECK(run({"qnc", "--n", "9", "--c", "6", "--method", "formula"}).out == "5\n");
}

TEST_CASE("construct writes a certified canonical witness")
{
    fs::path out = scratch("join.g6");
    Run r = run({"construct", "--r", "2/5", "--n", "20", "--kind", "join", "--out", out.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["omega"] == 6);
    CHECK(j["chi"] == 8);
    std::ifstream in(out);
    std::string g6;
    in >> g6;
    CHECK(g6 == j["witness"]);
    qcc::Graph g = qcc::from_graph6(g6);
    CHECK(qcc::canonical_graph6(g) == g6);
    fs::remove(out);
}

TEST_CASE("verify writes a report and reports failures through the exit code")
{
    fs::path out = scratch("report.csv");
    Run r = run({"verify", "--r", "1/2,2/5", "--n-max", "6", "--out", out.string()});
    CHECK(r.code == 0);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "section,r,n,k,c,expression,lhs,relation,rhs,status");
    fs::remove(out);

    Run csv1 = run({"--threads", "1", "verify", "--r", "1/2,3/4", "--n-max", "6"});
    Run csv4 = run({"--threads", "4", "verify", "--r", "3/4,1/2", "--n-max", "6"});
    CHECK(csv1.out == csv4.out);
    Run json1 = run({"--threads", "1", "--format", "json", "verify", "--r", "2/3", "--n-max", "6"});
    Run json4 = run({"--threads", "4", "--format", "json", "verify", "--r", "2/3", "--n-max", "6"});
    CHECK(json1.out == json4.out);
    CHECK(run({"verify", "--r", "1/2", "--n-max", "10"}).code == 2);
}

TEST_CASE("cache directory from flag and environment")
{
    fs::path dir = scratch("cache");
    fs::remove_all(dir);
    Run a = run({"--cache-dir", dir.string(), "qnc", "--n", "6", "--c", "4"});
    CHECK(a.code == 0);
    CHECK(fs::exists(dir / "qnc.jsonl"));
    Run b = run({"--cache-dir", dir.string(), "qnc", "--n", "6", "--c", "4"});
    CHECK(a.out == b.out);

    fs::path env_dir = scratch("cache-env");
    fs::remove_all(env_dir);
    ::setenv("QCC_CACHE_DIR", env_dir.c_str(), 1);
    Run c = run({"omega", "--n", "7", "--k", "2", "--brute"});
    ::unsetenv("QCC_CACHE_DIR");
    CHECK(c.code == 0);
    CHECK(fs::exists(env_dir / "omega_nk.jsonl"));
    fs::remove_all(dir);
    fs::remove_all(env_dir);
}
