#include <qcc/cache.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef QCC_VERSION
#define QCC_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;

namespace qcc {

std::string tool_version() { return "qcc " QCC_VERSION; }

namespace {

std::size_t arity(RecordKind kind) { return kind == RecordKind::ramsey_witness ? 3 : 2; }

std::string utc_now()
{
    auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string CacheKey::str() const
{
    std::string out = to_string(kind) + "(";
    for (std::size_t i = 0; i < params.size(); ++i)
        out += (i ? "," : "") + std::to_string(params[i]);
    return out + ")";
}

CacheKey make_key(RecordKind kind, std::span<const std::int64_t> params)
{
    if (params.size() != arity(kind))
        throw std::invalid_argument("cache key for " + to_string(kind) + " needs " + std::to_string(arity(kind)) +
                                    " parameters");
    for (std::int64_t p : params)
        if (p < 0)
            throw std::invalid_argument("cache key parameters must be non-negative");
    // Every kind's tuple is positional (n first), so the canonical form is the
    // tuple itself; rates never reach the key, only the integers derived from them.
    return {kind, {params.begin(), params.end()}};
}

nlohmann::json to_json(const CacheEntry &entry)
{
    return {{"key", entry.key.str()},
            {"record", to_json(entry.record)},
            {"created_at", entry.created_at},
            {"tool_version", entry.tool_version}};
}

CacheEntry entry_from_json(const nlohmann::json &j)
{
    CacheEntry e;
    e.record = record_from_json(j.at("record"));
    e.key = make_key(e.record.kind, e.record.params);
    e.created_at = j.value("created_at", "");
    e.tool_version = j.value("tool_version", "");
    if (j.contains("key") && j.at("key").get<std::string>() != e.key.str())
        throw std::invalid_argument("cache line key does not match its record");
    return e;
}

ResultCache::ResultCache(fs::path dir, std::ostream *warnings) : dir_(std::move(dir)), warnings_(warnings)
{
    if (dir_.empty())
        return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
        degrade("cannot create " + dir_.string() + ": " + ec.message());
        return;
    }
    // Probe: the directory must accept appends.
    fs::path probe = dir_ / ".write-test";
    {
        std::ofstream out(probe, std::ios::app);
        if (!out) {
            degrade(dir_.string() + " is not writable");
            return;
        }
    }
    fs::remove(probe, ec);
    persistent_ = true;
}

void ResultCache::degrade(const std::string &why)
{
    persistent_ = false;
    std::ostream &w = warnings_ ? *warnings_ : std::cerr;
    w << "warning: cache disabled (" << why << "); results are kept in memory only\n";
}

fs::path ResultCache::file_for(RecordKind kind) const { return dir_ / (to_string(kind) + ".jsonl"); }

fs::path ResultCache::quarantine_file_for(RecordKind kind) const
{
    return dir_ / (to_string(kind) + ".quarantine.jsonl");
}

CacheStats ResultCache::stats() const
{
    std::lock_guard lock(mutex_);
    return stats_;
}

void ResultCache::load(RecordKind kind)
{
    if (loaded_[kind] || !persistent_)
        return;
    loaded_[kind] = true;
    std::ifstream in(file_for(kind));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            CacheEntry e = entry_from_json(nlohmann::json::parse(line));
            if (e.key.kind != kind)
                throw std::invalid_argument("record kind does not match file");
            // Later lines win; the file is append-only.
            CacheKey key = e.key;
            entries_[key] = std::move(e);
            certified_.erase(key);
        } catch (const std::exception &) {
            // Partial trailing line from an interrupted writer, or junk.
            ++stats_.skipped_lines;
        }
    }
}

void ResultCache::append(const fs::path &file, const nlohmann::json &line)
{
    std::string text = line.dump() + "\n";
    std::ofstream out(file, std::ios::app | std::ios::binary);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        degrade("write to " + file.string() + " failed");
}

std::optional<WitnessRecord> ResultCache::get(RecordKind kind, std::span<const std::int64_t> params)
{
    CacheKey key = make_key(kind, params);
    std::lock_guard lock(mutex_);
    load(kind);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        ++stats_.misses;
        return std::nullopt;
    }
    if (!certified_[key]) {
        Certification c = certify(it->second.record);
        if (!c.ok) {
            ++stats_.quarantined;
            ++stats_.misses;
            if (persistent_) {
                nlohmann::json q = to_json(it->second);
                q["quarantine_reason"] = c.reason;
                append(quarantine_file_for(kind), q);
            }
            entries_.erase(it);
            certified_.erase(key);
            return std::nullopt;
        }
        certified_[key] = true;
    }
    ++stats_.hits;
    return it->second.record;
}

void ResultCache::put(const WitnessRecord &record)
{
    CacheEntry e{make_key(record.kind, record.params), record, utc_now(), tool_version()};
    e.record.params = e.key.params;
    std::lock_guard lock(mutex_);
    load(record.kind);
    if (persistent_)
        append(file_for(record.kind), to_json(e));
    CacheKey key = e.key;
    certified_.erase(key);
    entries_[key] = std::move(e);
}

} // namespace qcc
