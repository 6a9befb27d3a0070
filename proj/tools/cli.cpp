#include "cli.hpp"

#include <qcc/bounds.hpp>
#include <qcc/cache.hpp>
#include <qcc/canon.hpp>
#include <qcc/constructions.hpp>
#include <qcc/graph6.hpp>
#include <qcc/kernels.hpp>
#include <qcc/qnc.hpp>
#include <qcc/ramsey.hpp>
#include <qcc/ramsey_search.hpp>
#include <qcc/rate.hpp>
#include <qcc/solvers.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

namespace qcc {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required result (a witness) could not be produced.
struct Unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string cache_dir;
    std::string format = "text";
    std::uint64_t seed = 1;
    int threads = 0;
    double time_limit = 60.0;
};

struct Output {
    Json result;
    std::function<void(std::ostream &)> text;
    // For verify: the report goes to a file instead of a single row.
    std::string body;
    int status = 0;
};

Json interval_json(const ValueInterval &v)
{
    Json j = {{"lo", v.lo()}};
    j["hi"] = v.bounded() ? Json(v.hi()) : Json(nullptr);
    j["exact"] = v.exact();
    return j;
}

std::string value_text(const ValueInterval &v) { return v.exact() ? std::to_string(v.lo()) : v.str(); }

std::string partition_text(const std::vector<int> &parts)
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? "," : "") + std::to_string(parts[i]);
    return out + "]";
}

// Certified, canonically labelled witness or throws.
std::string certified_g6(const WitnessRecord &record)
{
    Certification c = certify(record);
    if (!c.ok)
        throw std::logic_error("witness failed certification: " + c.reason);
    return canonical_graph6(from_graph6(*record.witness_g6));
}

WitnessSearchOptions search_options(const Globals &g, RecordStore *store)
{
    WitnessSearchOptions o;
    o.seed = g.seed;
    o.time_limit_seconds = g.time_limit;
    o.store = store;
    return o;
}

void check_positive(int value, const char *name)
{
    if (value < 1)
        throw UsageError(std::string("--") + name + " must be at least 1");
}

Output cmd_ramsey(int s, int t)
{
    check_positive(s, "s");
    check_positive(t, "t");
    RamseyEntry e = RamseyTable::bundled().lookup(s, t);
    Output o;
    o.result = {{"s", s}, {"t", t}, {"value", interval_json(e.value)}, {"source", e.source}};
    o.text = [e](std::ostream &os) {
        os << e.value.str() << (e.value.exact() ? " exact" : " bounds") << "\n";
        os << "source: " << e.source << "\n";
    };
    return o;
}

Output cmd_omega(int n, int k, bool brute, const Globals &g, ResultCache &cache)
{
    check_positive(n, "n");
    check_positive(k, "k");
    std::int64_t key[] = {n, k};
    std::optional<WitnessRecord> record = cache.get(RecordKind::omega_nk, key);
    if (record && brute && record->method != Method::brute_force)
        record.reset();
    std::string note;

    if (!record && brute) {
        if (n > kDefaultEnumerationLimit)
            throw UsageError("--brute needs n <= " + std::to_string(kDefaultEnumerationLimit));
        record = inverse_ramsey_bruteforce(n, k).second;
        cache.put(*record);
    } else if (!record) {
        ValueInterval value = inverse_ramsey(n, k);
        WitnessRecord r{RecordKind::omega_nk, {n, k}, value, std::nullopt, Method::table};
        if (value.bounded()) {
            WitnessOutcome w = ramsey_witness(n, k, static_cast<int>(value.hi()), search_options(g, &cache));
            if (w.status == WitnessStatus::found) {
                // A witness can only tighten the upper end.
                r.value = ValueInterval(value.lo(), clique_number(*w.graph));
                r.witness_g6 = canonical_graph6(*w.graph);
                r.method = w.method;
                cache.put(r);
            } else {
                note = "witness unavailable: " + w.detail;
            }
        } else {
            note = "no finite upper bound known";
        }
        record = r;
    }

    Output o;
    std::optional<std::string> g6;
    if (record->witness_g6)
        g6 = certified_g6(*record);
    o.result = {{"n", n}, {"k", k}, {"value", interval_json(record->value)}, {"method", to_string(record->method)}};
    o.result["witness"] = g6 ? Json(*g6) : Json(nullptr);
    if (!note.empty())
        o.result["note"] = note;
    ValueInterval v = record->value;
    o.text = [v, g6, note](std::ostream &os) {
        os << value_text(v) << "\n";
        if (g6)
            os << "witness: " << *g6 << "\n";
        if (!note.empty())
            os << note << "\n";
    };
    return o;
}

Output cmd_qnc(int n, int c, const std::string &method, ResultCache &cache)
{
    check_positive(n, "n");
    check_positive(c, "c");
    if (c > n)
        throw UsageError("--c must not exceed --n");
    Output o;
    if (method == "formula") {
        int k = n - c;
        ValueInterval v;
        try {
            v = qnc_formula(n, k);
        } catch (const std::domain_error &e) {
            throw UsageError(std::string("formula: ") + e.what());
        }
        o.result = {{"n", n}, {"c", c}, {"value", interval_json(v)}, {"method", "formula"}, {"witness", nullptr}};
        o.text = [v](std::ostream &os) { os << value_text(v) << "\n"; };
        return o;
    }
    if (n > kDefaultEnumerationLimit)
        throw UsageError("brute force needs n <= " + std::to_string(kDefaultEnumerationLimit));
    std::int64_t key[] = {n, c};
    std::optional<WitnessRecord> record = cache.get(RecordKind::qnc, key);
    if (!record) {
        record = qnc_bruteforce(n, c).second;
        cache.put(*record);
    }
    std::string g6 = certified_g6(*record);
    ValueInterval v = record->value;
    o.result = {{"n", n}, {"c", c}, {"value", interval_json(v)}, {"method", "brute"}, {"witness", g6}};
    o.text = [v, g6](std::ostream &os) { os << value_text(v) << "\n" << "witness: " << g6 << "\n"; };
    return o;
}

Output partition_output(Json head, const PartitionResult &p)
{
    Output o;
    o.result = std::move(head);
    o.result["value"] = interval_json(p.value);
    o.result["partition"] = p.partition;
    o.text = [p](std::ostream &os) {
        os << value_text(p.value) << "\n" << "partition: " << partition_text(p.partition) << "\n";
    };
    return o;
}

Output cmd_construct(const std::string &rate, int n, const std::string &kind, const std::string &out_path,
                     const Globals &g, ResultCache &cache)
{
    check_positive(n, "n");
    RationalRate r = RationalRate::parse(rate);
    WitnessSearchOptions search = search_options(g, &cache);
    Graph graph;
    std::string detail;
    try {
        if (kind == "simple") {
            UpperWitness w = simple_upper_witness(r, n, search);
            graph = w.graph;
            detail = w.source_detail;
        } else {
            JoinPlan plan;
            try {
                plan = plan_join(r, n);
            } catch (const std::domain_error &e) {
                throw UsageError(std::string("join: ") + e.what());
            }
            JoinOptions jo;
            jo.search = search;
            JoinResult j = join_construction(plan, jo);
            graph = j.graph;
            detail = "q bound " + value_text(j.q_bound) + ", certified piece sum " + std::to_string(j.certified_bound);
        }
    } catch (const WitnessUnavailable &e) {
        throw Unavailable(e.what());
    }

    RateParams p = rate_params(r, n);
    int omega = clique_number(graph);
    int chi = chromatic_number(graph);
    if (chi != p.c)
        throw std::logic_error("construction has chi " + std::to_string(chi) + ", expected " + std::to_string(p.c));
    std::string g6 = canonical_graph6(graph);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << g6 << "\n";
        if (!f)
            throw UsageError("cannot write " + out_path);
    }
    Output o;
    o.result = {{"r", r.str()}, {"n", n}, {"kind", kind}, {"c", p.c}, {"omega", omega}, {"chi", chi},
                {"witness", g6}, {"detail", detail}};
    o.text = [=](std::ostream &os) {
        os << "omega " << omega << ", chi " << chi << "\n" << "witness: " << g6 << "\n";
        if (!detail.empty())
            os << detail << "\n";
    };
    return o;
}

std::vector<RationalRate> parse_rates(const std::string &list)
{
    std::vector<RationalRate> rates;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            rates.push_back(RationalRate::parse(item));
    if (rates.empty())
        throw UsageError("--r needs at least one rate");
    return rates;
}

Output cmd_verify(const std::string &rates, int n_max, int omega_n_max, const std::string &out_path,
                  const Globals &g)
{
    check_positive(n_max, "n-max");
    VerifyOptions vo;
    vo.omega_n_max = omega_n_max;
    VerificationReport report;
    try {
        report = verify_bounds(parse_rates(rates), n_max, vo);
    } catch (const CapacityError &e) {
        throw UsageError(e.what());
    }
    std::string body = g.format == "json" ? to_json(report).dump(2) + "\n" : to_csv(report);
    Output o;
    o.status = report.ok() ? 0 : 1;
    if (out_path.empty()) {
        o.body = body;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << body;
        if (!f)
            throw UsageError("cannot write " + out_path);
        o.result = {{"passed", report.passed}, {"failed", report.failed}, {"skipped", report.skipped},
                    {"out", out_path}};
        o.text = [report, out_path](std::ostream &os) {
            os << report.passed << " passed, " << report.failed << " failed, " << report.skipped << " skipped\n"
               << "report: " << out_path << "\n";
        };
    }
    return o;
}

std::string csv_cell(const Json &v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_object() && v.contains("lo")) {
        std::string hi = v["hi"].is_null() ? "inf" : std::to_string(v["hi"].get<std::int64_t>());
        return v["exact"].get<bool>() ? hi : "[" + std::to_string(v["lo"].get<std::int64_t>()) + "," + hi + "]";
    }
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ";" : "") + csv_cell(v[i]);
        return out;
    }
    return v.dump();
}

void emit(const Output &o, const std::string &format, std::ostream &out)
{
    if (!o.body.empty()) {
        out << o.body;
        return;
    }
    if (format == "json") {
        out << o.result.dump(2) << "\n";
    } else if (format == "csv") {
        std::string header, row;
        for (auto it = o.result.begin(); it != o.result.end(); ++it) {
            header += (header.empty() ? "" : ",") + it.key();
            std::string cell = csv_cell(it.value());
            if (cell.find_first_of(",\"") != std::string::npos) {
                std::string quoted = "\"";
                for (char ch : cell)
                    quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                cell = quoted + "\"";
            }
            row += (it == o.result.begin() ? "" : ",") + cell;
        }
        out << header << "\n" << row << "\n";
    } else if (format == "g6") {
        if (!o.result.contains("witness") || !o.result["witness"].is_string())
            throw Unavailable("no witness graph to print");
        out << o.result["witness"].get<std::string>() << "\n";
    } else {
        o.text(out);
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact and bounded values of the least clique number for given order and chromatic number"};
    app.name("qcc");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", tool_version());

    Globals g;
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory")->envname("QCC_CACHE_DIR");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "g6"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomised searches")->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--time-limit", g.time_limit, "Seconds allowed for a witness search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int s = 0, t = 0, n = 0, k = 0, c = 0, beta = 0, alpha = 0, n_max = 0, omega_n_max = 0;
    bool brute = false;
    std::string method = "brute", rate, kind = "simple", out_path, rates;

    auto *ramsey = app.add_subcommand("ramsey", "Classical Ramsey number R(s,t) from the bundled table");
    ramsey->add_option("--s", s)->required();
    ramsey->add_option("--t", t)->required();

    auto *omega = app.add_subcommand("omega", "omega(n,k): least clique number given n vertices and alpha <= k");
    omega->add_option("--n", n)->required();
    omega->add_option("--k", k)->required();
    omega->add_flag("--brute", brute, "Exhaustive search instead of the Ramsey table");

    auto *qnc = app.add_subcommand("qnc", "Q(n,c): least clique number given n vertices and chi = c");
    qnc->add_option("--n", n)->required();
    qnc->add_option("--c", c)->required();
    qnc->add_option("--method", method)->check(CLI::IsMember({"brute", "formula"}))->capture_default_str();

    auto *qsmall = app.add_subcommand("qsmall", "q(k) over partitions into at most three parts");
    qsmall->add_option("--k", k)->required();

    auto *qgen = app.add_subcommand("qgen", "q(beta, alpha) over all partitions of beta");
    qgen->add_option("--beta", beta)->required();
    qgen->add_option("--alpha", alpha)->required();

    auto *construct = app.add_subcommand("construct", "Certified upper-bound witness for rate r and order n");
    construct->add_option("--r", rate, "Rate as an exact fraction P/Q")->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--kind", kind)->check(CLI::IsMember({"simple", "join"}))->capture_default_str();
    construct->add_option("--out", out_path, "Write the witness graph6 here");

    auto *verify = app.add_subcommand("verify", "Check every bound against exhaustive values");
    verify->add_option("--r", rates, "Comma-separated rates P/Q")->required();
    verify->add_option("--n-max", n_max)->required();
    verify->add_option("--omega-n-max", omega_n_max, "Largest n for omega checks (default: n-max)");
    verify->add_option("--out", out_path, "Report file (CSV, or JSON with --format json)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream sink_out, sink_err;
        int code = app.exit(e, sink_out, sink_err);
        out << sink_out.str();
        err << sink_err.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (g.threads > 0)
            kernels::set_thread_count(g.threads);
        ResultCache cache(g.cache_dir, &err);
        Output o;
        if (*ramsey)
            o = cmd_ramsey(s, t);
        else if (*omega)
            o = cmd_omega(n, k, brute, g, cache);
        else if (*qnc)
            o = cmd_qnc(n, c, method, cache);
        else if (*qsmall) {
            if (k < 0)
                throw UsageError("--k must be non-negative");
            o = partition_output(Json{{"k", k}}, q_small(k));
        } else if (*qgen) {
            check_positive(beta, "beta");
            check_positive(alpha, "alpha");
            o = partition_output(Json{{"beta", beta}, {"alpha", alpha}}, q_general(beta, alpha));
        } else if (*construct)
            o = cmd_construct(rate, n, kind, out_path, g, cache);
        else if (*verify)
            o = cmd_verify(rates, n_max, omega_n_max, out_path, g);
        emit(o, g.format, out);
        return o.status;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unavailable &e) {
        err << "error: witness unavailable: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qcc
