#include <qcc/graph6.hpp>
#include <qcc/solvers.hpp>
#include <qcc/witness.hpp>

#include <stdexcept>

namespace qcc {

std::string to_string(RecordKind kind)
{
    switch (kind) {
    case RecordKind::omega_nk:
        return "omega_nk";
    case RecordKind::qnc:
        return "qnc";
    case RecordKind::ramsey_witness:
        return "ramsey_witness";
    }
    return "?";
}

std::string to_string(Method method)
{
    switch (method) {
    case Method::brute_force:
        return "brute_force";
    case Method::table:
        return "table";
    case Method::construction:
        return "construction";
    case Method::local_search:
        return "local_search";
    }
    return "?";
}

RecordKind parse_record_kind(std::string_view text)
{
    for (RecordKind k : {RecordKind::omega_nk, RecordKind::qnc, RecordKind::ramsey_witness})
        if (to_string(k) == text)
            return k;
    throw std::invalid_argument("unknown record kind: " + std::string(text));
}

Method parse_method(std::string_view text)
{
    for (Method m : {Method::brute_force, Method::table, Method::construction, Method::local_search})
        if (to_string(m) == text)
            return m;
    throw std::invalid_argument("unknown method: " + std::string(text));
}

Certification certify(const WitnessRecord &record)
{
    if (!record.witness_g6)
        return {};
    std::size_t expected = record.kind == RecordKind::ramsey_witness ? 3 : 2;
    if (record.params.size() != expected)
        return {false, "wrong number of parameters"};
    Graph g;
    try {
        g = from_graph6(*record.witness_g6);
    } catch (const std::exception &e) {
        return {false, std::string("undecodable witness: ") + e.what()};
    }
    if (g.order() != record.params[0])
        return {false, "witness has " + std::to_string(g.order()) + " vertices"};
    if (!record.value.bounded())
        return {false, "witness attached to an unbounded value"};

    int omega = clique_number(g);
    if (omega != record.value.hi())
        return {false, "witness clique number " + std::to_string(omega) + " differs from claimed " +
                           std::to_string(record.value.hi())};
    switch (record.kind) {
    case RecordKind::omega_nk:
        if (independence_number(g) > record.params[1])
            return {false, "witness independence number exceeds k"};
        break;
    case RecordKind::qnc:
        if (chromatic_number(g) != record.params[1])
            return {false, "witness chromatic number differs from c"};
        break;
    case RecordKind::ramsey_witness:
        if (independence_number(g) > record.params[1])
            return {false, "witness independence number exceeds k"};
        if (omega > record.params[2])
            return {false, "witness clique number exceeds target"};
        break;
    }
    return {};
}

nlohmann::json to_json(const WitnessRecord &record)
{
    nlohmann::json value = {{"lo", record.value.lo()}};
    value["hi"] = record.value.bounded() ? nlohmann::json(record.value.hi()) : nlohmann::json(nullptr);
    nlohmann::json j = {
        {"kind", to_string(record.kind)},
        {"params", record.params},
        {"value", value},
        {"method", to_string(record.method)},
    };
    j["witness_g6"] = record.witness_g6 ? nlohmann::json(*record.witness_g6) : nlohmann::json(nullptr);
    return j;
}

WitnessRecord record_from_json(const nlohmann::json &j)
{
    WitnessRecord r;
    r.kind = parse_record_kind(j.at("kind").get<std::string>());
    r.params = j.at("params").get<std::vector<std::int64_t>>();
    const auto &v = j.at("value");
    std::int64_t lo = v.at("lo").get<std::int64_t>();
    std::int64_t hi = v.at("hi").is_null() ? ValueInterval::kUnbounded : v.at("hi").get<std::int64_t>();
    r.value = ValueInterval(lo, hi);
    if (j.contains("witness_g6") && !j.at("witness_g6").is_null())
        r.witness_g6 = j.at("witness_g6").get<std::string>();
    r.method = parse_method(j.at("method").get<std::string>());
    return r;
}

} // namespace qcc
