#include "isharp/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace isharp {

void LaurentPoly::set(long exponent, Int coefficient) {
    if (coefficient == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = std::move(coefficient);
}

LaurentPoly LaurentPoly::monomial(long exponent, Int coefficient) {
    LaurentPoly p;
    p.set(exponent, std::move(coefficient));
    return p;
}

Int LaurentPoly::coeff(long exponent) const {
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exponent() const {
    if (is_zero()) fail(Errc::BadParameter, "zero polynomial has no exponents");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exponent() const {
    if (is_zero()) fail(Errc::BadParameter, "zero polynomial has no exponents");
    return coeffs_.rbegin()->first;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

LaurentPoly LaurentPoly::shifted(long s) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + s] = c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs_) out.set(e, out.coeff(e) + c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs_) out.set(e, out.coeff(e) - c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.set(ea + eb, out.coeff(ea + eb) + ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long e = it->first;
        const Int& c = it->second;
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str();
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

// Replaces the Unicode minus sign (U+2212) with '-' so pasted math text
// parses; positions reported in errors refer to the rewritten string.
std::string ascii_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::ParseError, what + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    long integer() {
        bool negative = false;
        if (!done() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) error("expected digits");
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos;
        }
        return negative ? -value : value;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    const std::string s = ascii_minus(text);
    Cursor cur{s};
    LaurentPoly out;

    cur.skip_ws();
    if (cur.done()) cur.error("empty polynomial");

    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.done()) break;

        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            ++cur.pos;
            cur.skip_ws();
        } else if (!first) {
            cur.error("expected '+' or '-' between terms");
        }

        Int coefficient = 1;
        bool have_coefficient = false;
        if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coefficient = Int(cur.integer());
            have_coefficient = true;
        }

        long exponent = 0;
        if (!cur.done() && cur.peek() == 't') {
            ++cur.pos;
            exponent = 1;
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                exponent = cur.integer();
            }
        } else if (!have_coefficient) {
            cur.error("expected a coefficient or 't'");
        }

        out.set(exponent, out.coeff(exponent) + sign * coefficient);
        first = false;
    }
    return out;
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
    if (p.is_zero()) fail(Errc::NotSymmetrizable, "zero polynomial");
    const long lo = p.min_exponent();
    const long hi = p.max_exponent();
    if ((lo + hi) % 2 != 0)
        fail(Errc::NotSymmetrizable,
             "exponent span " + std::to_string(lo) + ".." + std::to_string(hi) +
                 " has no integer center");
    const long center2 = lo + hi;
    for (const auto& [e, c] : p.coefficients()) {
        if (p.coeff(center2 - e) != c)
            fail(Errc::NotSymmetrizable, "coefficients at t^" + std::to_string(e) + " and t^" +
                                             std::to_string(center2 - e) + " differ");
    }
    const Int unit = p.eval_at_one();
    if (unit != 1 && unit != -1)
        fail(Errc::EvalNotUnit, "value at t = 1 is " + unit.str() + ", expected +-1");
    LaurentPoly q = p.shifted(-center2 / 2);
    return unit == 1 ? q : -q;
}

namespace {

// Ordinary (non-Laurent) polynomial with ascending integer coefficients.
using Dense = std::vector<Int>;

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// num / den with remainder required to vanish; den must be monic up to sign.
Dense dense_div_exact(Dense num, const Dense& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    if (dn < dd) throw std::logic_error("division degree underflow");
    Dense quot(dn - dd + 1);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Int q = num[k + dd];
        if (den[dd] != 1) {
            if (q % den[dd] != 0) throw std::logic_error("inexact polynomial division");
            q /= den[dd];
        }
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= q * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("polynomial division left a remainder");
    return quot;
}

Dense cyclotomic_like(long n) {  // t^n - 1
    Dense out(static_cast<std::size_t>(n) + 1);
    out[0] = -1;
    out[static_cast<std::size_t>(n)] = 1;
    return out;
}

}  // namespace

LaurentPoly torus_knot_alexander(long p, long q) {
    if (p < 2 || q < 2)
        fail(Errc::BadParameter,
             "torus knot parameters must be >= 2, got (" + std::to_string(p) + ", " +
                 std::to_string(q) + ")");
    if (std::gcd(p, q) != 1)
        fail(Errc::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") = " +
                                   std::to_string(std::gcd(p, q)));

    const Dense numerator = dense_mul(cyclotomic_like(p * q), cyclotomic_like(1));
    const Dense denominator = dense_mul(cyclotomic_like(p), cyclotomic_like(q));
    const Dense quotient = dense_div_exact(numerator, denominator);

    LaurentPoly raw;
    for (std::size_t i = 0; i < quotient.size(); ++i)
        if (quotient[i] != 0) raw = raw + LaurentPoly::monomial(static_cast<long>(i), quotient[i]);
    return normalize_symmetric(raw);
}

StaircaseSpec::StaircaseSpec(std::vector<long> exps) : exponents(std::move(exps)) {
    if (exponents.empty()) fail(Errc::BadParameter, "staircase exponent list is empty");
    if (exponents.front() != 0)
        fail(Errc::BadParameter, "staircase exponents must start at n_0 = 0");
    for (std::size_t j = 1; j < exponents.size(); ++j)
        if (exponents[j] <= exponents[j - 1])
            fail(Errc::BadParameter, "staircase exponents must be strictly increasing, got " +
                                         std::to_string(exponents[j]) + " after " +
                                         std::to_string(exponents[j - 1]));
}

std::vector<long> StaircaseSpec::lengths() const {
    std::vector<long> out;
    out.reserve(k());
    for (std::size_t j = 1; j < exponents.size(); ++j)
        out.push_back(exponents[j] - exponents[j - 1]);
    return out;
}

StaircaseSpec lspace_decompose(const LaurentPoly& delta) {
    if (delta.is_zero()) fail(Errc::NotLSpaceForm, "zero polynomial");

    for (const auto& [e, c] : delta.coefficients())
        if (c != 1 && c != -1)
            fail(Errc::NotLSpaceForm,
                 "coefficient " + c.str() + " at exponent " + std::to_string(e) +
                     " is not +-1");

    std::vector<long> exps;  // descending
    for (auto it = delta.coefficients().rbegin(); it != delta.coefficients().rend(); ++it)
        exps.push_back(it->first);

    const std::size_t m = exps.size();
    for (std::size_t i = 0; i < m; ++i)
        if (exps[i] != -exps[m - 1 - i])
            fail(Errc::NotLSpaceForm,
                 "support is not symmetric: exponent " + std::to_string(exps[i]) +
                     " lacks its mirror");
    if (m % 2 == 0 || exps[m / 2] != 0)
        fail(Errc::NotLSpaceForm, "missing constant term");

    for (std::size_t i = 0; i < m; ++i) {
        const Int expected = (i % 2 == 0) ? 1 : -1;
        if (delta.coeff(exps[i]) != expected)
            fail(Errc::NotLSpaceForm,
                 "coefficient " + delta.coeff(exps[i]).str() + " at exponent " +
                     std::to_string(exps[i]) + " breaks the alternating pattern");
    }

    // exps[m/2 ..] is [0, -n_1, ..., -n_k]; negating gives the ladder.
    std::vector<long> ladder(exps.begin() + static_cast<long>(m / 2), exps.end());
    for (long& e : ladder) e = -e;
    return StaircaseSpec(std::move(ladder));
}

LaurentPoly reconstruct(const StaircaseSpec& spec) {
    const long k = static_cast<long>(spec.k());
    LaurentPoly out = LaurentPoly::monomial(0, (k % 2 == 0) ? 1 : -1);
    for (long j = 1; j <= k; ++j) {
        const Int sign = ((k - j) % 2 == 0) ? 1 : -1;
        const long n = spec.exponents[static_cast<std::size_t>(j)];
        out = out + LaurentPoly::monomial(n, sign) + LaurentPoly::monomial(-n, sign);
    }
    return out;
}

}  // namespace isharp
