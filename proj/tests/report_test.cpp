#include "isharp/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <regex>

using namespace isharp;

TEST_CASE("trefoil pipeline end to end") {
    const Report rep = run(KnotInput::torus(2, 3), {});
    CHECK(rep.alexander.to_string() == "t - 1 + t^-1");
    CHECK(rep.spec.exponents == std::vector<long>{0, 1});
    CHECK(rep.dim_khi == 3);
    CHECK(rep.khi_graded_dims == std::map<long, long>{{1, 1}, {0, 1}, {-1, 1}});
    CHECK(rep.rank_d1 == 1);
    CHECK(rep.dim_isharp_c == 4);
    CHECK(rep.f2_lower_bound == 6);
    CHECK(rep.torsion.verdict == TorsionVerdict::torsion_proved);
    CHECK(rep.hfk_sharp_report.torsion_summands == std::vector<Int>{2});
    CHECK(rep.hfk_prime2_dim == 4);
    CHECK(rep.model_check.dims_equal);
    CHECK(rep.next_to_top == NextToTop::forces_nonvanishing);
}

TEST_CASE("the three input kinds agree on the trefoil") {
    const Report a = run(KnotInput::torus(2, 3), {});
    const Report b = run(KnotInput::alexander("t - 1 + t^-1"), {});
    const Report c = run(KnotInput::staircase({0, 1}), {});
    for (const Report* r : {&b, &c}) {
        CHECK(r->spec == a.spec);
        CHECK(r->dim_khi == a.dim_khi);
        CHECK(r->rank_d1 == a.rank_d1);
        CHECK(r->dim_isharp_c == a.dim_isharp_c);
    }
}

TEST_CASE("unknot report") {
    const Report rep = run(KnotInput::staircase({0}), {});
    CHECK(rep.dim_khi == 1);
    CHECK(rep.dim_isharp_c == 2);
    CHECK(rep.torsion.verdict == TorsionVerdict::inconclusive);
    CHECK(!rep.next_to_top.has_value());
    CHECK(report_to_json(rep)["next_to_top"] == "degenerate_genus");
}

TEST_CASE("non-L-space input surfaces NotLSpaceForm") {
    try {
        run(KnotInput::alexander("-t + 3 - t^-1"), {});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotLSpaceForm);
    }
}

TEST_CASE("scalar options flow through the report") {
    RunOptions opts;
    opts.c_plus = Rat(3, 2);
    opts.c_minus = Rat(-7, 5);
    const Report rep = run(KnotInput::torus(2, 5), opts);
    CHECK(rep.rank_d1 == 2);  // scalar independent
    CHECK(rep.dim_isharp_c == 6);
    CHECK(report_to_json(rep)["c_plus"] == "3/2");
    CHECK(report_to_json(rep)["c_minus"] == "-7/5");
}

TEST_CASE("report JSON round-trips byte-identically") {
    for (const auto& input :
         {KnotInput::torus(2, 3), KnotInput::torus(3, 5), KnotInput::staircase({0, 2, 3})}) {
        const std::string once = report_to_json(run(input, {})).dump(2);
        const std::string twice = Json::parse(once).dump(2);
        CHECK(once == twice);
    }
}

TEST_CASE("table and JSON present identical numbers") {
    const Report rep = run(KnotInput::torus(3, 4), {});
    const Json j = report_to_json(rep);
    const std::string table = report_to_table(rep);

    auto table_value = [&table](const std::string& key) {
        const std::regex row(key + std::string(" *: (-?\\d+)"));
        std::smatch m;
        REQUIRE(std::regex_search(table, m, row));
        return std::stol(m[1]);
    };
    CHECK(table_value("dim KHI") == j["dim_khi"].get<long>());
    CHECK(table_value("rank d1") == j["rank_d1"].get<long>());
    CHECK(table_value("dim I#\\(C\\)") == j["dim_isharp_c"].get<long>());
    CHECK(table_value("F2 lower bound") == j["f2_lower_bound"].get<long>());
    CHECK(table_value("HFK# free rank") == j["hfk_sharp"]["free_rank"].get<long>());
}

TEST_CASE("dimension identity holds on every report") {
    for (long p = 2; p <= 5; ++p)
        for (long q = p + 1; p * q <= 40; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Report rep = run(KnotInput::torus(p, q), {});
            CHECK(2 * rep.dim_khi == rep.dim_isharp_c + 2 * rep.rank_d1);
        }
}

TEST_CASE("batch keeps input order and records per-line errors") {
    const std::vector<std::string> lines = {
        "# comment line",
        "torus 2 3",
        "",
        "staircase 0 1 2",
        "alexander -t + 3 - t^-1",
        "torus 2 4",
        "staircase 0 5",
    };
    const std::vector<BatchEntry> entries = run_batch(lines, {}, 3);
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].input == "torus 2 3");
    CHECK(entries[0].report.has_value());
    CHECK(entries[1].input == "staircase 0 1 2");
    CHECK(entries[1].report->dim_isharp_c == 6);
    CHECK(entries[2].error == Errc::NotLSpaceForm);
    CHECK(entries[3].error == Errc::NotCoprime);
    CHECK(entries[4].report->dim_isharp_c == 2 * (2 * 1 + 1) - 0);
}

TEST_CASE("batch over the first torus knots satisfies the dimension identity") {
    std::vector<std::pair<long, long>> knots;
    for (long p = 2; p <= 10; ++p)
        for (long q = p + 1; p * q <= 100; ++q)
            if (std::gcd(p, q) == 1) knots.emplace_back(p * q, p);
    std::sort(knots.begin(), knots.end());

    std::vector<std::string> lines;
    for (const auto& [pq, p] : knots) {
        lines.push_back("torus " + std::to_string(p) + " " + std::to_string(pq / p));
        if (lines.size() == 50) break;
    }
    const std::vector<BatchEntry> entries = run_batch(lines, {});
    REQUIRE(entries.size() == 50);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        REQUIRE(entries[i].report.has_value());
        CHECK(entries[i].input == lines[i]);
        const Report& r = *entries[i].report;
        CHECK(2 * r.dim_khi == r.dim_isharp_c + 2 * r.rank_d1);
    }
}

TEST_CASE("external JSON formats round-trip through their parsers") {
    // Sparse matrix with exact fraction strings.
    RatMat m(3, 4);
    m(0, 1) = Rat(3, 2);
    m(2, 0) = Rat(-7, 5);
    m(1, 3) = 4;
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(matrix_to_json(m)["entries"][0][2] == "3/2");

    const GradedModule v({2, 0, -2});
    CHECK(module_from_json(module_to_json(v)) == v);

    const GradedMap f = GradedMap::zero(v, v, 1);
    const GradedMap g = graded_map_from_json(graded_map_to_json(f));
    CHECK(g.domain() == v);
    CHECK(g.declared_shift() == std::optional<long>(1));

    const Staircase s = build_staircase(StaircaseSpec({0, 2, 3}));
    const Staircase back = staircase_from_json(staircase_to_json(s));
    CHECK(back.spec == s.spec);
    CHECK(back.vertices == s.vertices);
    CHECK(back.arrows == s.arrows);
    CHECK(staircase_to_json(s)["arrows"][0]["sign"] == "-");

    const LaurentPoly delta = torus_knot_alexander(3, 4);
    CHECK(laurent_from_json(laurent_to_json(delta)) == delta);

    // Coefficients beyond 64 bits fall back to decimal strings.
    const LaurentPoly big = LaurentPoly::monomial(1, Int("123456789012345678901234567890"));
    CHECK(laurent_to_json(big)[0][1].is_string());
    CHECK(laurent_from_json(laurent_to_json(big)) == big);
}

TEST_CASE("knot input parsing errors") {
    CHECK_THROWS_AS(KnotInput::parse_line("torus 2"), Error);
    CHECK_THROWS_AS(KnotInput::parse_line("torus two three"), Error);
    CHECK_THROWS_AS(KnotInput::parse_line("staircase"), Error);
    CHECK_THROWS_AS(KnotInput::parse_line("unknown 1 2"), Error);
    CHECK(KnotInput::parse_line("alexander t - 1 + t^-1").polynomial_text == "t - 1 + t^-1");
}
