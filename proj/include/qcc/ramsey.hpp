#pragma once

#include <qcc/graph.hpp>
#include <qcc/interval.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcc {

struct RamseyEntry {
    ValueInterval value;
    std::string source;
};

/// Classical Ramsey numbers R(s,t) keyed canonically with s <= t.
class RamseyTable {
public:
    /// Parses the line format `s t lo hi source...`; `#` starts a comment.
    static RamseyTable parse(std::string_view text);
    static RamseyTable load(const std::filesystem::path &path);

    /// The table compiled into the library from data/ramsey_table.txt.
    static const RamseyTable &bundled();

    /// Applies symmetry and the trivial rows R(1,t) = 1, R(2,t) = t. Pairs
    /// outside the table get [max(s,t), inf) with source "trivial".
    RamseyEntry lookup(int s, int t) const;

    const std::map<std::pair<int, int>, RamseyEntry> &entries() const { return entries_; }

private:
    std::map<std::pair<int, int>, RamseyEntry> entries_;
};

ValueInterval ramsey_number(int s, int t, const RamseyTable &table = RamseyTable::bundled());

/// omega(n,k): the least clique number of an n-vertex graph with independence
/// number at most k. Uses omega(n,k) <= t  <=>  n < R(t+1, k+1).
ValueInterval inverse_ramsey(int n, int k, const RamseyTable &table = RamseyTable::bundled());

} // namespace qcc
