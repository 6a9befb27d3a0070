#include <qcc/rate.hpp>

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qcc {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("rate must be an exact fraction P/Q, got '" + std::string(whole) + "'");
    return value;
}

} // namespace

RationalRate::RationalRate(std::int64_t p, std::int64_t q)
{
    if (q == 0)
        throw std::invalid_argument("rate denominator is zero");
    value_ = Rational(p, q);
    if (value_ <= 0 || value_ > 1)
        throw std::invalid_argument("rate must satisfy 0 < r <= 1, got " + std::to_string(p) + "/" +
                                    std::to_string(q));
}

RationalRate RationalRate::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.find_first_of(".eE") != std::string_view::npos)
        throw std::invalid_argument("decimal rate '" + std::string(text) +
                                    "' rejected: write r as an exact fraction P/Q, since ceil(r*n) and "
                                    "floor(1/r) are not reliable in floating point");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_integer(text, text), 1};
    return {parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text)};
}

std::int64_t floor(const Rational &x)
{
    std::int64_t n = x.numerator(), d = x.denominator();
    return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t ceil(const Rational &x) { return -floor(-x); }

std::string to_string(const Rational &x)
{
    if (x.denominator() == 1)
        return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

} // namespace qcc
