#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pbrigid {

// All tuple arithmetic is exact and unbounded: lcm's of user tuples overflow
// any fixed width quickly.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline std::string int_str(const Int& v) { return v.str(); }

// Canonical rational rendering: "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& q)
{
    if (is_integer(q))
        return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Int parse_int(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("malformed integer literal: " + text);
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed integer literal: " + text);
    return Int(text);
}

inline Rat parse_rat(const std::string& text)
{
    std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(text));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: " + text);
    return Rat(parse_int(text.substr(0, slash)), den);
}

inline std::int64_t to_int64(const Int& v)
{
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

inline std::size_t to_size(const Int& v)
{
    if (v < 0 || v > Int(UINT32_MAX))
        throw std::overflow_error("value out of supported index range: " + v.str());
    return v.convert_to<std::size_t>();
}

} // namespace pbrigid
