#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace qcc {

/// Integer interval [lo, hi]; hi may be unbounded. Unknown quantities carry
/// their certain range through every formula instead of a guessed value.
class ValueInterval {
public:
    static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

    constexpr ValueInterval() = default;
    constexpr explicit ValueInterval(std::int64_t exact) : lo_(exact), hi_(exact) {}
    ValueInterval(std::int64_t lo, std::int64_t hi);

    static ValueInterval at_least(std::int64_t lo) { return {lo, kUnbounded}; }

    constexpr std::int64_t lo() const { return lo_; }
    constexpr std::int64_t hi() const { return hi_; }
    constexpr bool bounded() const { return hi_ != kUnbounded; }
    constexpr bool exact() const { return lo_ == hi_; }

    /// Component-wise sum; unbounded absorbs.
    friend ValueInterval operator+(const ValueInterval &a, const ValueInterval &b);

    /// Component-wise minimum: the range of min(x, y) for x in a, y in b.
    friend ValueInterval min(const ValueInterval &a, const ValueInterval &b);

    friend bool operator==(const ValueInterval &, const ValueInterval &) = default;

    /// "[6,6]", "[43,48]", "[5,inf)".
    std::string str() const;

private:
    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
};

std::ostream &operator<<(std::ostream &os, const ValueInterval &v);

} // namespace qcc
