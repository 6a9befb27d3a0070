#include <qcc/ramsey.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ramsey_table_data.hpp"

namespace qcc {

RamseyTable RamseyTable::parse(std::string_view text)
{
    RamseyTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        int s = 0, t = 0;
        std::int64_t lo = 0;
        std::string hi_text;
        if (!(fields >> s))
            continue;
        if (!(fields >> t >> lo >> hi_text))
            throw std::invalid_argument("ramsey table line " + std::to_string(line_no) + ": expected `s t lo hi source`");
        std::int64_t hi = hi_text == "inf" ? ValueInterval::kUnbounded : std::stoll(hi_text);
        std::string source;
        std::getline(fields >> std::ws, source);
        if (s < 1 || t < 1)
            throw std::invalid_argument("ramsey table line " + std::to_string(line_no) + ": s and t must be positive");
        if (s > t)
            std::swap(s, t);
        table.entries_[{s, t}] = RamseyEntry{ValueInterval(lo, hi), source};
    }
    return table;
}

RamseyTable RamseyTable::load(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open ramsey table " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const RamseyTable &RamseyTable::bundled()
{
    static const RamseyTable table = parse(detail::kBundledRamseyTable);
    return table;
}

RamseyEntry RamseyTable::lookup(int s, int t) const
{
    if (s < 1 || t < 1)
        throw std::invalid_argument("ramsey_number: s and t must be positive");
    if (s > t)
        std::swap(s, t);
    if (s == 1)
        return {ValueInterval(1), "trivial"};
    if (s == 2)
        return {ValueInterval(t), "trivial"};
    if (auto it = entries_.find({s, t}); it != entries_.end())
        return it->second;
    return {ValueInterval::at_least(t), "trivial"};
}

ValueInterval ramsey_number(int s, int t, const RamseyTable &table) { return table.lookup(s, t).value; }

ValueInterval inverse_ramsey(int n, int k, const RamseyTable &table)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("inverse_ramsey: n and k must be positive");
    // n < R.lo(t+1,k+1) proves omega(n,k) <= t; n >= R.hi(t+1,k+1) proves omega(n,k) > t.
    std::int64_t lo = -1, hi = -1;
    for (int t = 1; t <= n && hi < 0; ++t) {
        ValueInterval r = table.lookup(t + 1, k + 1).value;
        if (lo < 0 && (!r.bounded() || n < r.hi()))
            lo = t;
        if (n < r.lo())
            hi = t;
    }
    // t = n always qualifies since R(n+1, k+1) >= n+1.
    if (lo < 0)
        lo = n;
    if (hi < 0)
        hi = n;
    return {lo, hi};
}

} // namespace qcc
