#pragma once

#include <qcc/graph.hpp>
#include <qcc/interval.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcc {

enum class RecordKind { omega_nk, qnc, ramsey_witness };
enum class Method { brute_force, table, construction, local_search };

std::string to_string(RecordKind kind);
std::string to_string(Method method);
RecordKind parse_record_kind(std::string_view text);
Method parse_method(std::string_view text);

/// A computed value with an optional graph6 witness; the unit of the cache.
///   omega_nk       params (n, k)          witness: n vertices, alpha <= k, omega = value.hi
///   qnc            params (n, c)          witness: n vertices, chi = c,   omega = value.hi
///   ramsey_witness params (n, k, target)  witness: n vertices, alpha <= k, omega = value.hi <= target
struct WitnessRecord {
    RecordKind kind = RecordKind::omega_nk;
    std::vector<std::int64_t> params;
    ValueInterval value;
    std::optional<std::string> witness_g6;
    Method method = Method::brute_force;

    friend bool operator==(const WitnessRecord &, const WitnessRecord &) = default;
};

struct Certification {
    bool ok = true;
    std::string reason;
};

/// Decodes the witness and recomputes the invariants the record claims.
Certification certify(const WitnessRecord &record);

nlohmann::json to_json(const WitnessRecord &record);
WitnessRecord record_from_json(const nlohmann::json &j);

/// Lookup/insert interface for previously computed records.
class RecordStore {
public:
    virtual ~RecordStore() = default;
    virtual std::optional<WitnessRecord> get(RecordKind kind, std::span<const std::int64_t> params) = 0;
    virtual void put(const WitnessRecord &record) = 0;
};

} // namespace qcc
