#pragma once

#include "isharp/errors.hpp"
#include "isharp/numeric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isharp {

// Integer-coefficient Laurent polynomial in one variable t. Zero
// coefficients are never stored; exponent keys are unique by construction.
// Values are immutable in spirit: every operation returns a fresh value.
class LaurentPoly {
  public:
    LaurentPoly() = default;  // zero

    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long exponent, Int coefficient);

    /**
     * Parses the signed-monomial grammar, e.g. "t^3 - t^2 + 1 - t^-2 + t^-3".
     * Whitespace-insensitive; "t" abbreviates t^1; an explicit integer
     * coefficient may prefix a power ("3t^2"); the Unicode minus sign is
     * accepted as "-". Throws ParseError with the offending position.
     */
    static LaurentPoly parse(std::string_view text);

    const std::map<long, Int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(long exponent) const;
    long min_exponent() const;  // BadParameter on zero
    long max_exponent() const;
    Int eval_at_one() const;

    LaurentPoly shifted(long s) const;  // multiply by t^s

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly&) const = default;

    // Canonical descending-exponent form, e.g. "t - 1 + t^-1"; "0" for zero.
    std::string to_string() const;

  private:
    void set(long exponent, Int coefficient);

    std::map<long, Int> coeffs_;
};

/**
 * The unique unit multiple t^s * (+-p) with q(t) = q(1/t) and q(1) = 1.
 * NotSymmetrizable when no integer centering makes p palindromic,
 * EvalNotUnit when |p(1)| != 1.
 */
LaurentPoly normalize_symmetric(const LaurentPoly& p);

/**
 * Symmetric-normalized Alexander polynomial of the (p,q) torus knot,
 * computed by exact division of (t^{pq}-1)(t-1) by (t^p-1)(t^q-1).
 * BadParameter unless p, q >= 2; NotCoprime unless gcd(p, q) = 1.
 */
LaurentPoly torus_knot_alexander(long p, long q);

// The exponent ladder 0 = n_0 < n_1 < ... < n_k extracted from an
// L-space-form Alexander polynomial; k = 0 encodes the unknot form 1.
struct StaircaseSpec {
    std::vector<long> exponents;

    explicit StaircaseSpec(std::vector<long> exps);

    std::size_t k() const { return exponents.size() - 1; }
    // Step lengths m_j = n_j - n_{j-1}, j = 1..k; every entry >= 1.
    std::vector<long> lengths() const;

    bool operator==(const StaircaseSpec&) const = default;
};

/**
 * Succeeds exactly when delta has the alternating form
 * t^{n_k} - t^{n_{k-1}} + ... + (-1)^k + ... - t^{-n_{k-1}} + t^{-n_k}:
 * all coefficients +-1, symmetric support containing exponent 0, signs
 * alternating from +1 at the top. NotLSpaceForm otherwise, naming the
 * offending coefficient and exponent.
 */
StaircaseSpec lspace_decompose(const LaurentPoly& delta);

// Re-expands a spec into its alternating polynomial; inverse of
// lspace_decompose, and always evaluates to 1 at t = 1.
LaurentPoly reconstruct(const StaircaseSpec& spec);

}  // namespace isharp
