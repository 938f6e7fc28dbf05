#include "isharp/laurent.hpp"

#include <doctest.h>

#include <numeric>

using namespace isharp;

namespace {

LaurentPoly poly(const char* text) { return LaurentPoly::parse(text); }

// t^n - 1 as a Laurent polynomial.
LaurentPoly t_power_minus_one(long n) {
    return LaurentPoly::monomial(n, 1) - LaurentPoly::one();
}

}  // namespace

TEST_CASE("parser handles the signed monomial grammar") {
    CHECK(poly("t - 1 + t^-1").to_string() == "t - 1 + t^-1");
    CHECK(poly("  t^3-t^2+1-t^-2+t^-3 ").to_string() == "t^3 - t^2 + 1 - t^-2 + t^-3");
    CHECK(poly("-t + 3 - t^-1").coeff(0) == 3);
    CHECK(poly("2t^2 + t").coeff(2) == 2);
    CHECK(poly("t + t").coeff(1) == 2);
    CHECK(poly("1 - 1").is_zero());
    // Unicode minus sign from pasted math text.
    CHECK(poly("t \xe2\x88\x92 1 + t^\xe2\x88\x92" "1") == poly("t - 1 + t^-1"));

    CHECK_THROWS_WITH_AS(poly("t^"), doctest::Contains("position"), Error);
    CHECK_THROWS_AS(poly("t 1"), Error);
    CHECK_THROWS_AS(poly(""), Error);
    CHECK_THROWS_AS(poly("x + 1"), Error);
}

TEST_CASE("canonical string emission") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::one().to_string() == "1");
    CHECK(poly("-t + 3 - t^-1").to_string() == "-t + 3 - t^-1");
    CHECK((LaurentPoly::monomial(2, 5) - LaurentPoly::monomial(-3, 1)).to_string() ==
          "5t^2 - t^-3");
}

TEST_CASE("normalize_symmetric") {
    CHECK(normalize_symmetric(LaurentPoly::one()) == LaurentPoly::one());

    // Sign flip forced by the value-1 normalization.
    const LaurentPoly flipped = normalize_symmetric(poly("-t + 1 - t^-1"));
    CHECK(flipped == poly("t - 1 + t^-1"));
    CHECK(flipped.eval_at_one() == 1);

    // Off-center palindromes recenter.
    CHECK(normalize_symmetric(poly("t^2 - t + 1")) == poly("t - 1 + t^-1"));

    // Odd span cannot be centered on an integer power.
    CHECK_THROWS_AS(normalize_symmetric(poly("t^2 - t")), Error);
    try {
        normalize_symmetric(poly("t^2 - t"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSymmetrizable);
    }

    // Symmetric but not a unit at t = 1.
    try {
        normalize_symmetric(poly("t + 1 + t^-1"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EvalNotUnit);
    }

    CHECK_THROWS_AS(normalize_symmetric(LaurentPoly()), Error);
}

TEST_CASE("normalize_symmetric is idempotent") {
    for (const char* text : {"t - 1 + t^-1", "-t^2 + t - 1 + t^-1 - t^-2", "1"}) {
        const LaurentPoly once = normalize_symmetric(poly(text));
        CHECK(normalize_symmetric(once) == once);
    }
}

TEST_CASE("torus knot Alexander polynomials") {
    CHECK(torus_knot_alexander(2, 3) == poly("t - 1 + t^-1"));
    CHECK(torus_knot_alexander(3, 4) == poly("t^3 - t^2 + 1 - t^-2 + t^-3"));
    CHECK(torus_knot_alexander(2, 5) == poly("t^2 - t + 1 - t^-1 + t^-2"));

    try {
        torus_knot_alexander(2, 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotCoprime);
    }
    try {
        torus_knot_alexander(1, 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadParameter);
    }
}

TEST_CASE("torus knot polynomials satisfy the defining product identity") {
    // Independent of the division route: multiply back and compare
    // (t^{pq}-1)(t-1) = Delta * (t^p-1)(t^q-1) * t^{(p-1)(q-1)/2}.
    for (long p = 2; p <= 7; ++p)
        for (long q = p + 1; p * q <= 60; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LaurentPoly delta = torus_knot_alexander(p, q);
            const LaurentPoly lhs = t_power_minus_one(p * q) * t_power_minus_one(1);
            const LaurentPoly rhs =
                (delta * t_power_minus_one(p) * t_power_minus_one(q))
                    .shifted((p - 1) * (q - 1) / 2);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("lspace_decompose") {
    CHECK(lspace_decompose(poly("t - 1 + t^-1")).exponents == std::vector<long>{0, 1});
    CHECK(lspace_decompose(LaurentPoly::one()).exponents == std::vector<long>{0});
    CHECK(lspace_decompose(poly("t^3 - t^2 + 1 - t^-2 + t^-3")).exponents ==
          std::vector<long>{0, 2, 3});

    // Figure-eight: the constant coefficient 3 is flagged.
    try {
        lspace_decompose(poly("-t + 3 - t^-1"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotLSpaceForm);
        CHECK(std::string(e.what()).find("coefficient 3") != std::string::npos);
    }

    // All +-1 but the wrong alternation.
    try {
        lspace_decompose(poly("t + 1 + t^-1"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotLSpaceForm);
    }

    // Missing constant term.
    CHECK_THROWS_AS(lspace_decompose(poly("t - t^-1")), Error);
}

TEST_CASE("staircase spec validation and lengths") {
    const StaircaseSpec spec({0, 2, 3});
    CHECK(spec.k() == 2);
    CHECK(spec.lengths() == std::vector<long>{2, 1});

    CHECK_THROWS_AS(StaircaseSpec({1, 2}), Error);
    CHECK_THROWS_AS(StaircaseSpec({0, 2, 2}), Error);
    CHECK_THROWS_AS(StaircaseSpec(std::vector<long>{}), Error);
}

TEST_CASE("decompose / reconstruct round trip over torus knots") {
    for (long p = 2; p <= 7; ++p)
        for (long q = p + 1; p * q <= 60; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LaurentPoly delta = torus_knot_alexander(p, q);
            const StaircaseSpec spec = lspace_decompose(delta);
            CHECK(reconstruct(spec) == delta);
            CHECK(reconstruct(spec).eval_at_one() == 1);
        }
}
