#include "isharp/staircase.hpp"

#include "isharp/oracles.hpp"
#include "isharp/rng.hpp"
#include "isharp/selftest.hpp"

#include <doctest.h>

using namespace isharp;

TEST_CASE("trefoil staircase") {
    const Staircase s = build_staircase(StaircaseSpec({0, 1}));
    CHECK(s.vertices.gradings() == std::vector<long>{1, 0, -1});
    REQUIRE(s.arrows.size() == 2);
    CHECK(s.arrows[0] == Arrow{0, 1, 1, -1});
    CHECK(s.arrows[1] == Arrow{2, 1, 1, +1});
}

TEST_CASE("unknot staircase") {
    const Staircase s = build_staircase(StaircaseSpec({0}));
    CHECK(s.vertices.gradings() == std::vector<long>{0});
    CHECK(s.arrows.empty());
}

TEST_CASE("T(3,4) staircase reads lengths 1,2,2,1 with signs -,+,-,+") {
    const Staircase s = build_staircase(StaircaseSpec({0, 2, 3}));
    CHECK(s.vertices.gradings() == std::vector<long>{3, 2, 0, -2, -3});
    REQUIRE(s.arrows.size() == 4);
    CHECK(s.arrows[0] == Arrow{0, 1, 1, -1});
    CHECK(s.arrows[1] == Arrow{2, 1, 2, +1});
    CHECK(s.arrows[2] == Arrow{2, 3, 2, -1});
    CHECK(s.arrows[3] == Arrow{4, 3, 1, +1});
}

TEST_CASE("extract_d1 keeps exactly the unit-length arrows") {
    SUBCASE("trefoil") {
        const D1Pair d1 = extract_d1(build_staircase(StaircaseSpec({0, 1})));
        CHECK(d1.minus.matrix()(1, 0) == 1);  // grading 0 <- grading 1
        CHECK(d1.plus.matrix()(1, 2) == 1);   // grading 0 <- grading -1
        CHECK(rank(d1.minus) == 1);
        CHECK(rank(d1.plus) == 1);
        CHECK(d1.plus.declared_shift() == std::optional<long>(1));
        CHECK(d1.minus.declared_shift() == std::optional<long>(-1));
    }
    SUBCASE("unknot: both zero") {
        const D1Pair d1 = extract_d1(build_staircase(StaircaseSpec({0})));
        CHECK(d1.plus.matrix().is_zero());
        CHECK(d1.minus.matrix().is_zero());
    }
    SUBCASE("T(3,4): the two length-2 arrows are dropped") {
        const D1Pair d1 = extract_d1(build_staircase(StaircaseSpec({0, 2, 3})));
        CHECK(d1.minus.matrix()(1, 0) == 1);  // 2 <- 3
        CHECK(d1.plus.matrix()(3, 4) == 1);   // -2 <- -3
        CHECK(rank(d1.minus + d1.plus) == 2);
        long entries = 0;
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                if (d1.minus.matrix()(r, c) != 0) ++entries;
                if (d1.plus.matrix()(r, c) != 0) ++entries;
            }
        CHECK(entries == 2);
    }
}

TEST_CASE("isharp_dim on pinned staircases") {
    CHECK(isharp_dim(StaircaseSpec({0, 1}), 1, 1).dim_homology == 4);
    CHECK(isharp_dim(StaircaseSpec({0}), 1, 1).dim_homology == 2);

    const ConeReport t25 = isharp_dim(StaircaseSpec({0, 1, 2}), 1, 1);
    CHECK(t25.rank == 2);
    CHECK(t25.dim_homology == 6);

    try {
        isharp_dim(StaircaseSpec({0, 1}), 0, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroScalar);
    }
}

TEST_CASE("scalar invariance of the cone rank") {
    Rng rng(31);
    for (int s = 0; s < 6; ++s) {
        const StaircaseSpec spec = random_spec(rng, static_cast<std::size_t>(rng.range(0, 10)), 3);
        const long base = isharp_dim(spec, 1, 1).rank;
        for (int i = 0; i < 25; ++i) {
            const Rat cp = rng.nonzero_rational(5, 4);
            const Rat cm = rng.nonzero_rational(5, 4);
            const ConeReport rep = isharp_dim(spec, cp, cm);
            CHECK(rep.rank == base);
            CHECK(rep.dim_homology == 2 * (2 * static_cast<long>(spec.k()) + 1) - 2 * base);
        }
    }
}

TEST_CASE("T(2,2j+1) family law against the brute-force oracle") {
    for (long j = 1; j <= 20; ++j) {
        std::vector<long> exps;
        for (long i = 0; i <= j; ++i) exps.push_back(i);
        const StaircaseSpec spec(exps);
        const ConeReport rep = isharp_dim(spec, 1, 1);
        CHECK(rep.rank == j);
        CHECK(rep.dim_homology == 2 * j + 2);
        CHECK(oracles::staircase_rank_bruteforce(spec) == j);
    }
}

TEST_CASE("d1+ and d1- annihilate each other on every staircase") {
    Rng rng(37);
    for (int s = 0; s < 30; ++s) {
        const StaircaseSpec spec = random_spec(rng, static_cast<std::size_t>(rng.range(0, 12)), 4);
        const D1Pair d1 = extract_d1(build_staircase(spec));
        CHECK(mul(d1.plus.matrix(), d1.minus.matrix()).is_zero());
        CHECK(mul(d1.minus.matrix(), d1.plus.matrix()).is_zero());
        // Mirror model: transposing changes nothing reported.
        const GradedMap sum = d1.plus + d1.minus;
        CHECK(rank(sum.transposed()) == rank(sum));
    }
}
