#include <qcc/interval.hpp>

#include <algorithm>
#include <stdexcept>

namespace qcc {

ValueInterval::ValueInterval(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi)
{
    if (lo > hi)
        throw std::invalid_argument("interval lower end exceeds upper end");
}

ValueInterval operator+(const ValueInterval &a, const ValueInterval &b)
{
    std::int64_t hi = (a.bounded() && b.bounded()) ? a.hi_ + b.hi_ : ValueInterval::kUnbounded;
    return {a.lo_ + b.lo_, hi};
}

ValueInterval min(const ValueInterval &a, const ValueInterval &b)
{
    return {std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_)};
}

std::string ValueInterval::str() const
{
    std::string out = "[" + std::to_string(lo_) + ",";
    out += bounded() ? std::to_string(hi_) + "]" : std::string("inf)");
    return out;
}

std::ostream &operator<<(std::ostream &os, const ValueInterval &v) { return os << v.str(); }

} // namespace qcc
