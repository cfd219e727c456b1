#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "socular/detail/text.hpp"
#include "socular/error.hpp"

namespace socular {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline bool is_half_integer(const Rational& x) { return x.denominator() == 2; }

inline std::int64_t floor(const Rational& x)
{
    auto q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0)
        --q;
    return q;
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor(x)); }


/// Parses `a`, `-a` or `a/b` with b > 0. Decimals are rejected.
inline Rational parse_rational(std::string_view text)
{
    text = detail::trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_int64(text, "rational"));
    auto num = detail::parse_int64(text.substr(0, slash), "rational numerator");
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw parse_error("rational denominator must be an unsigned positive integer: '" +
                          std::string(text) + "'");
    auto den = detail::parse_int64(den_text, "rational denominator");
    if (den <= 0)
        throw parse_error("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& x)
{
    auto s = std::to_string(x.numerator());
    if (x.denominator() != 1)
        s += "/" + std::to_string(x.denominator());
    return s;
}

} // namespace socular
