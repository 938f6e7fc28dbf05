#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace isharp {

// Exact scalars. Everything downstream (ranks, Smith forms, cone
// dimensions) is integer or rational arithmetic at arbitrary precision;
// floating point is never used.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// Lowest-terms "p/q", or plain "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rat parse_rat(std::string_view text);

}  // namespace isharp
