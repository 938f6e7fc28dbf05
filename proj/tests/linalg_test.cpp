#include "isharp/linalg.hpp"

#include "isharp/oracles.hpp"
#include "isharp/rng.hpp"

#include <doctest.h>

using namespace isharp;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

IntMat diag_of(const std::vector<Int>& d, std::size_t rows, std::size_t cols) {
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(IntMat(5, 5)) == 0);
    CHECK(rank(IntMat::identity(5)) == 5);
    CHECK(rank(from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
    CHECK(rank(from_rows({{0, 1}, {1, 0}})) == 2);
    CHECK(rank(IntMat(0, 4)) == 0);
    CHECK(rank(IntMat(4, 0)) == 0);

    RatMat q(2, 2);
    q(0, 0) = Rat(1, 2);
    q(0, 1) = Rat(1, 3);
    q(1, 0) = Rat(3, 2);
    q(1, 1) = Rat(1, 1);
    CHECK(rank(q) == 1);
}

TEST_CASE("fraction-free rank agrees with naive elimination") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::size_t rows = static_cast<std::size_t>(rng.range(0, 9));
        const std::size_t cols = static_cast<std::size_t>(rng.range(0, 9));
        RatMat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.rational(-6, 6, 4);
        CHECK(rank(m) == oracles::rank_naive(m));
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMat::identity(4)) == 1);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{2, 1}, {1, 1}})) == 1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, -2}})) == -6);
}

TEST_CASE("rank_mod2") {
    CHECK(rank_mod2(from_rows({{2}})) == 0);
    CHECK(rank_mod2(from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank_mod2(from_rows({{1, 0}, {0, 3}})) == 2);
    CHECK(rank_mod2(from_rows({{-1, 1}, {1, -1}})) == 1);
}

TEST_CASE("nullspace basis") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const std::size_t rows = static_cast<std::size_t>(rng.range(1, 7));
        const std::size_t cols = static_cast<std::size_t>(rng.range(1, 7));
        RatMat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(rng.range(-4, 4));
        const RatMat basis = nullspace_basis(m);
        CHECK(static_cast<long>(basis.cols()) == static_cast<long>(cols) - rank(m));
        CHECK(mul(m, basis).is_zero());
        CHECK(rank(basis) == static_cast<long>(basis.cols()));
    }
}

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("single entry") {
        const Snf s = smith_normal_form(from_rows({{2}}));
        CHECK(s.divisors == std::vector<Int>{2});
    }
    SUBCASE("divisibility chain of diag(1, 6, 4)") {
        // Products of determinantal gcds: 1, 2, 24, so divisors 1, 2, 12.
        const IntMat m = from_rows({{1, 0, 0}, {0, 6, 0}, {0, 0, 4}});
        const Snf s = smith_normal_form(m);
        CHECK(s.divisors == std::vector<Int>{1, 2, 12});
        CHECK(mul(mul(s.u, m), s.v) == diag_of(s.divisors, 3, 3));
        const Int du = determinant(s.u);
        const Int dv = determinant(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
    SUBCASE("zero matrix keeps zero divisors") {
        CHECK(smith_normal_form(IntMat(2, 3)).divisors == std::vector<Int>{0, 0});
    }
    SUBCASE("negative entries normalize to non-negative divisors") {
        CHECK(smith_normal_form(from_rows({{-3}})).divisors == std::vector<Int>{3});
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const std::size_t rows = static_cast<std::size_t>(rng.range(1, 7));
        const std::size_t cols = static_cast<std::size_t>(rng.range(1, 7));
        IntMat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.range(-9, 9);

        const Snf s = smith_normal_form(m);
        CHECK(mul(mul(s.u, m), s.v) == diag_of(s.divisors, rows, cols));
        CHECK(mul(s.u, s.u_inv) == IntMat::identity(rows));
        CHECK(mul(s.v, s.v_inv) == IntMat::identity(cols));
        const Int du = determinant(s.u);
        CHECK((du == 1 || du == -1));
        for (std::size_t t = 1; t < s.divisors.size(); ++t) {
            if (s.divisors[t - 1] == 0)
                CHECK(s.divisors[t] == 0);
            else
                CHECK(s.divisors[t] % s.divisors[t - 1] == 0);
        }
        // Rank over Q equals the number of nonzero divisors.
        long nonzero = 0;
        for (const Int& d : s.divisors)
            if (d != 0) ++nonzero;
        CHECK(nonzero == rank(m));
    }
}

TEST_CASE("integer complex homology") {
    SUBCASE("multiplication by 2 on a two-step lattice") {
        // 0 -> Z --2--> Z -> 0 has homology Z/2 in degree zero.
        const IntMat d = from_rows({{0, 0}, {2, 0}});
        const IntegerHomology h = integer_complex_homology(d);
        CHECK(h.free_rank == 0);
        CHECK(h.torsion == std::vector<Int>{2});
    }
    SUBCASE("zero differential is all free") {
        const IntegerHomology h = integer_complex_homology(IntMat(3, 3));
        CHECK(h.free_rank == 3);
        CHECK(h.torsion.empty());
    }
    SUBCASE("unit map has no homology") {
        const IntegerHomology h = integer_complex_homology(from_rows({{0, 0}, {1, 0}}));
        CHECK(h.free_rank == 0);
        CHECK(h.torsion.empty());
    }
    SUBCASE("coprime columns merge into a full image") {
        // d(a, b, c) = (0, 0, 2a + 3b): the image is the whole last axis.
        const IntMat d = from_rows({{0, 0, 0}, {0, 0, 0}, {2, 3, 0}});
        const IntegerHomology h = integer_complex_homology(d);
        CHECK(h.free_rank == 1);
        CHECK(h.torsion.empty());
    }
    SUBCASE("square-nonzero differential is rejected") {
        CHECK_THROWS_AS(integer_complex_homology(IntMat::identity(2)), Error);
    }
}
