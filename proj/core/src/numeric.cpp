#include "isharp/numeric.hpp"

#include "isharp/errors.hpp"

#include <cctype>

namespace isharp {

std::string rat_to_string(const Rat& r) {
    const Int n = numerator(r);
    const Int d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Int parse_int_part(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail(Errc::ParseError, "missing digits in rational '" + std::string(whole) + "'");
    Int value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::ParseError, "invalid character '" + std::string(1, c) + "' in rational '" +
                                       std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Int(-value) : value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) fail(Errc::ParseError, "empty rational");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int_part(s, s));
    const Int num = parse_int_part(trim(s.substr(0, slash)), s);
    const Int den = parse_int_part(trim(s.substr(slash + 1)), s);
    if (den == 0) fail(Errc::ParseError, "zero denominator in rational '" + std::string(s) + "'");
    return Rat(num, den);
}

}  // namespace isharp
