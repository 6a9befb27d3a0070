#include <qcc/cache.hpp>
#include <qcc/graph6.hpp>
#include <qcc/ramsey_search.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qcc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path() / ("qcc-cache-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(counter++));
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

WitnessRecord c5_record()
{
    return {RecordKind::omega_nk, {5, 2}, ValueInterval(2), to_graph6(Graph::cycle(5)), Method::brute_force};
}

std::vector<std::string> lines(const fs::path &file)
{
    std::ifstream in(file);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("keys")
{
    std::int64_t p[] = {5, 2};
    CHECK(make_key(RecordKind::omega_nk, p).str() == "omega_nk(5,2)");
    CHECK_THROWS(make_key(RecordKind::ramsey_witness, p));
    std::int64_t neg[] = {-1, 2};
    CHECK_THROWS(make_key(RecordKind::qnc, neg));
}

TEST_CASE("miss on an empty cache")
{
    TempDir dir;
    ResultCache cache(dir.path);
    CHECK(cache.persistent());
    std::int64_t p[] = {5, 2};
    CHECK_FALSE(cache.get(RecordKind::omega_nk, p).has_value());
    CHECK(cache.stats().misses == 1);
}

TEST_CASE("put then get, in process and across instances")
{
    TempDir dir;
    std::int64_t p[] = {5, 2};
    {
        ResultCache cache(dir.path);
        cache.put(c5_record());
        auto got = cache.get(RecordKind::omega_nk, p);
        REQUIRE(got.has_value());
        CHECK(*got == c5_record());
    }
    ResultCache again(dir.path);
    auto got = again.get(RecordKind::omega_nk, p);
    REQUIRE(got.has_value());
    CHECK(*got == c5_record());

    auto file = lines(again.file_for(RecordKind::omega_nk));
    REQUIRE(file.size() == 1);
    auto j = nlohmann::json::parse(file[0]);
    CHECK(j["key"] == "omega_nk(5,2)");
    CHECK(j["tool_version"] == tool_version());
    CHECK(j["created_at"].get<std::string>().size() == 20);
}

TEST_CASE("partial trailing line is skipped")
{
    TempDir dir;
    {
        ResultCache cache(dir.path);
        cache.put(c5_record());
    }
    ResultCache probe(dir.path);
    {
        std::ofstream out(probe.file_for(RecordKind::omega_nk), std::ios::app);
        out << R"x({"key":"omega_nk(7,2)","record":{"kind":"omega_nk","par)x";
    }
    ResultCache cache(dir.path);
    std::int64_t p[] = {5, 2}, q[] = {7, 2};
    CHECK(cache.get(RecordKind::omega_nk, p).has_value());
    CHECK_FALSE(cache.get(RecordKind::omega_nk, q).has_value());
    CHECK(cache.stats().skipped_lines == 1);
}

TEST_CASE("records that fail certification are quarantined")
{
    TempDir dir;
    ResultCache writer(dir.path);
    WitnessRecord bad = c5_record();
    bad.value = ValueInterval(1); // C5 has a clique of size 2
    writer.put(bad);

    ResultCache reader(dir.path);
    std::int64_t p[] = {5, 2};
    CHECK_FALSE(reader.get(RecordKind::omega_nk, p).has_value());
    CHECK(reader.stats().quarantined == 1);
    auto q = lines(reader.quarantine_file_for(RecordKind::omega_nk));
    REQUIRE(q.size() == 1);
    CHECK(nlohmann::json::parse(q[0]).contains("quarantine_reason"));

    // Recompute and store the right answer; later lines win.
    reader.put(inverse_ramsey_bruteforce(5, 2).second);
    ResultCache fresh(dir.path);
    auto got = fresh.get(RecordKind::omega_nk, p);
    REQUIRE(got.has_value());
    CHECK(got->value == ValueInterval(2));
}

TEST_CASE("tampered witness string is caught on read")
{
    TempDir dir;
    {
        ResultCache cache(dir.path);
        cache.put(c5_record());
    }
    ResultCache probe(dir.path);
    fs::path file = probe.file_for(RecordKind::omega_nk);
    std::string text = lines(file)[0];
    auto pos = text.find("\"Dhc\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"D~{\""); // K5 has alpha 1 but omega 5
    std::ofstream(file, std::ios::trunc) << text << "\n";

    ResultCache cache(dir.path);
    std::int64_t p[] = {5, 2};
    CHECK_FALSE(cache.get(RecordKind::omega_nk, p).has_value());
    CHECK(cache.stats().quarantined == 1);
}

TEST_CASE("unwritable directory degrades to memory")
{
    TempDir dir;
    fs::create_directories(dir.path);
    fs::path blocker = dir.path / "file";
    std::ofstream(blocker) << "x";
    std::ostringstream warnings;
    ResultCache cache(blocker / "sub", &warnings);
    CHECK_FALSE(cache.persistent());
    CHECK(warnings.str().find("warning") != std::string::npos);
    cache.put(c5_record());
    std::int64_t p[] = {5, 2};
    CHECK(cache.get(RecordKind::omega_nk, p).has_value());
}

TEST_CASE("in-memory cache")
{
    ResultCache cache;
    CHECK_FALSE(cache.persistent());
    cache.put(c5_record());
    std::int64_t p[] = {5, 2};
    CHECK(cache.get(RecordKind::omega_nk, p).has_value());
}

TEST_CASE("witness search consults and fills the store")
{
    TempDir dir;
    ResultCache cache(dir.path);
    WitnessSearchOptions o;
    o.store = &cache;
    WitnessOutcome first = ramsey_witness(8, 2, 3, o);
    REQUIRE(first.status == WitnessStatus::found);
    std::int64_t key[] = {8, 2, 3};
    CHECK(cache.get(RecordKind::ramsey_witness, key).has_value());
    WitnessOutcome second = ramsey_witness(8, 2, 3, o);
    REQUIRE(second.status == WitnessStatus::found);
    CHECK(*first.graph == *second.graph);
}
