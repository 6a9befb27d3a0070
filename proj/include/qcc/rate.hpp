#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace qcc {

using Rational = boost::rational<std::int64_t>;

/// An exact rate r = p/q with 0 < r <= 1, stored in lowest terms.
class RationalRate {
public:
    RationalRate(std::int64_t p, std::int64_t q);

    /// Accepts "P/Q" or an integer "P". Decimal input is rejected: ceil(r n)
    /// and floor(1/r) must be computed exactly.
    static RationalRate parse(std::string_view text);

    std::int64_t p() const { return value_.numerator(); }
    std::int64_t q() const { return value_.denominator(); }
    Rational value() const { return value_; }

    /// floor(1/r).
    std::int64_t k() const { return q() / p(); }

    /// ceil(1/r).
    std::int64_t ceil_inverse() const { return (q() + p() - 1) / p(); }

    /// ceil(r * n).
    std::int64_t ceil_times(std::int64_t n) const { return (p() * n + q() - 1) / q(); }

    bool reciprocal_of_integer() const { return p() == 1; }

    std::string str() const { return std::to_string(p()) + "/" + std::to_string(q()); }

    friend bool operator==(const RationalRate &, const RationalRate &) = default;
    friend bool operator<(const RationalRate &a, const RationalRate &b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

std::int64_t ceil(const Rational &x);
std::int64_t floor(const Rational &x);

std::string to_string(const Rational &x);

} // namespace qcc
