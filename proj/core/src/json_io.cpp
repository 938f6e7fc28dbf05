#include "isharp/json_io.hpp"

namespace isharp {

namespace {

// Coefficients fitting a 64-bit integer are emitted as JSON numbers,
// anything larger as a decimal string.
Json int_to_json(const Int& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

Int int_from_json(const Json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

Json graded_dims_to_json(const std::map<long, long>& dims) {
    Json out = Json::array();
    for (auto it = dims.rbegin(); it != dims.rend(); ++it)
        out.push_back(Json::array({it->first, it->second}));
    return out;
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
    Json out = Json::array();
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        out.push_back(Json::array({it->first, int_to_json(it->second)}));
    return out;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (const auto& pair : j)
        p = p + LaurentPoly::monomial(pair.at(0).get<long>(), int_from_json(pair.at(1)));
    return p;
}

Json module_to_json(const GradedModule& v) {
    return Json{{"gradings", v.gradings()}};
}

GradedModule module_from_json(const Json& j) {
    return GradedModule(j.at("gradings").get<std::vector<long>>());
}

Json matrix_to_json(const RatMat& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) entries.push_back(Json::array({r, c, rat_to_string(m(r, c))}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RatMat matrix_from_json(const Json& j) {
    RatMat m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries"))
        m(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) =
            parse_rat(e.at(2).get<std::string>());
    return m;
}

Json graded_map_to_json(const GradedMap& f) {
    Json out;
    out["domain"] = module_to_json(f.domain());
    out["codomain"] = module_to_json(f.codomain());
    if (f.declared_shift())
        out["shift"] = *f.declared_shift();
    else
        out["shift"] = "mixed";
    out["matrix"] = matrix_to_json(f.matrix());
    return out;
}

GradedMap graded_map_from_json(const Json& j) {
    GradedModule dom = module_from_json(j.at("domain"));
    GradedModule cod = module_from_json(j.at("codomain"));
    RatMat m = matrix_from_json(j.at("matrix"));
    const Json& shift = j.at("shift");
    if (shift.is_string())
        return GradedMap::mixed(std::move(dom), std::move(cod), std::move(m));
    return GradedMap::homogeneous(std::move(dom), std::move(cod), std::move(m),
                                  shift.get<long>());
}

Json staircase_to_json(const Staircase& s) {
    Json arrows = Json::array();
    for (const Arrow& a : s.arrows)
        arrows.push_back(Json{{"from", a.from},
                              {"to", a.to},
                              {"length", a.length},
                              {"sign", a.sign > 0 ? "+" : "-"}});
    return Json{{"exponents", s.spec.exponents},
                {"vertices", s.vertices.gradings()},
                {"arrows", std::move(arrows)}};
}

Staircase staircase_from_json(const Json& j) {
    StaircaseSpec spec(j.at("exponents").get<std::vector<long>>());
    GradedModule vertices(j.at("vertices").get<std::vector<long>>());
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
        const std::string sign = a.at("sign").get<std::string>();
        if (sign != "+" && sign != "-")
            fail(Errc::ParseError, "arrow sign must be '+' or '-', got '" + sign + "'");
        arrows.push_back({a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(),
                          a.at("length").get<long>(), sign == "+" ? +1 : -1});
    }
    return Staircase{std::move(spec), std::move(vertices), std::move(arrows)};
}

Json cone_report_to_json(const ConeReport& r) {
    Json torsion = Json::array();
    for (const Int& t : r.torsion_summands) torsion.push_back(int_to_json(t));
    return Json{{"dim_domain", r.dim_domain},
                {"dim_codomain", r.dim_codomain},
                {"rank", r.rank},
                {"dim_homology", r.dim_homology},
                {"graded_kernel_dims", graded_dims_to_json(r.graded_kernel_dims)},
                {"graded_cokernel_dims", graded_dims_to_json(r.graded_cokernel_dims)},
                {"torsion_summands", std::move(torsion)}};
}

Json certificate_to_json(const TorsionCertificate& c) {
    Json ledger = Json::array();
    for (const LedgerLine& line : c.ledger)
        ledger.push_back(Json{{"claim", line.claim},
                              {"lhs", line.lhs},
                              {"rel", line.rel},
                              {"rhs", line.rhs},
                              {"anchor", line.anchor},
                              {"holds", line.holds}});
    return Json{{"dim_khi", c.dim_khi},
                {"rank", c.rank_f},
                {"dim_isharp_c", c.dim_isharp_c},
                {"f2_lower_bound", c.f2_lower_bound},
                {"verdict", c.verdict == TorsionVerdict::torsion_proved ? "torsion_proved"
                                                                        : "inconclusive"},
                {"ledger", std::move(ledger)}};
}

Json profile_to_json(const GradedDimProfile& p) {
    return Json{{"top", p.top}, {"dims", graded_dims_to_json(p.dims)}};
}

Json counting_report_to_json(const CountingLemmaReport& r) {
    return Json{{"dim_a", r.dim_a},
                {"rank_delta_a", r.rank_delta_a},
                {"ker_delta_a", r.ker_delta_a},
                {"rank_delta_lambda_a", r.rank_delta_lambda_a},
                {"annihilation_bound_holds", r.annihilation_bound_holds},
                {"rank_equality_holds", r.rank_equality_holds},
                {"ker_lower_bound", r.ker_lower_bound},
                {"ker_bound_holds", r.ker_bound_holds},
                {"dim_cone_delta", r.dim_cone_delta},
                {"cone_lower_bound", r.cone_lower_bound},
                {"cone_bound_holds", r.cone_bound_holds},
                {"chain_verified", r.chain_verified}};
}

Json octahedral_report_to_json(const OctahedralReport& r) {
    Json vertices = Json::array();
    for (const VertexCheck& v : r.vertices)
        vertices.push_back(Json{{"vertex", v.vertex},
                                {"dim", v.dim},
                                {"rank_in", v.rank_in},
                                {"rank_out", v.rank_out},
                                {"exact", v.exact}});
    return Json{{"dim_cone_f", r.dim_cone_f},
                {"dim_cone_gf", r.dim_cone_gf},
                {"dim_cone_g", r.dim_cone_g},
                {"rank_f_to_gf", r.rank_f_to_gf},
                {"rank_gf_to_g", r.rank_gf_to_g},
                {"rank_connecting", r.rank_connecting},
                {"vertices", std::move(vertices)},
                {"exact", r.exact}};
}

Json model_comparison_to_json(const ModelComparison& m) {
    return Json{{"instanton_dim", m.instanton_dim},
                {"hf_dim", m.hf_dim},
                {"dims_equal", m.dims_equal},
                {"graded_breakdown_equal", m.graded_breakdown_equal},
                {"model_convention", m.model_convention}};
}

}  // namespace isharp
