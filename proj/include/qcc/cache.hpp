#pragma once

#include <qcc/witness.hpp>

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qcc {

std::string tool_version();

struct CacheKey {
    RecordKind kind = RecordKind::omega_nk;
    std::vector<std::int64_t> params;

    std::string str() const;
    auto operator<=>(const CacheKey &) const = default;
};

/// Validates the arity for the kind and returns the key in canonical form.
CacheKey make_key(RecordKind kind, std::span<const std::int64_t> params);

struct CacheEntry {
    CacheKey key;
    WitnessRecord record;
    std::string created_at;
    std::string tool_version;
};

nlohmann::json to_json(const CacheEntry &entry);
CacheEntry entry_from_json(const nlohmann::json &j);

struct CacheStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t quarantined = 0;
    std::size_t skipped_lines = 0;
};

/// One JSON-lines file per record kind (<dir>/<kind>.jsonl). Entries are
/// appended whole, one line per write, under a single writer lock. Witnesses
/// are re-certified when read; failures move to <kind>.quarantine.jsonl and
/// read as a miss. If the directory is unusable the cache keeps everything in
/// memory and says so once on `warnings`.
class ResultCache : public RecordStore {
public:
    /// Empty dir: in-memory only.
    explicit ResultCache(std::filesystem::path dir = {}, std::ostream *warnings = nullptr);

    std::optional<WitnessRecord> get(RecordKind kind, std::span<const std::int64_t> params) override;
    void put(const WitnessRecord &record) override;

    bool persistent() const { return persistent_; }
    const std::filesystem::path &directory() const { return dir_; }
    std::filesystem::path file_for(RecordKind kind) const;
    std::filesystem::path quarantine_file_for(RecordKind kind) const;
    CacheStats stats() const;

private:
    void load(RecordKind kind);
    void append(const std::filesystem::path &file, const nlohmann::json &line);
    void degrade(const std::string &why);

    std::filesystem::path dir_;
    std::ostream *warnings_;
    bool persistent_ = false;
    mutable std::mutex mutex_;
    std::map<RecordKind, bool> loaded_;
    std::map<CacheKey, CacheEntry> entries_;
    // Keys already certified in this process.
    std::map<CacheKey, bool> certified_;
    CacheStats stats_;
};

} // namespace qcc
