#include "isharp/report.hpp"

#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>

namespace isharp {

KnotInput KnotInput::torus(long p, long q) {
    KnotInput in;
    in.kind = Kind::torus;
    in.p = p;
    in.q = q;
    in.echo = "torus " + std::to_string(p) + " " + std::to_string(q);
    return in;
}

KnotInput KnotInput::alexander(std::string text) {
    KnotInput in;
    in.kind = Kind::alexander;
    in.polynomial_text = text;
    in.echo = "alexander " + text;
    return in;
}

KnotInput KnotInput::staircase(std::vector<long> exponents) {
    KnotInput in;
    in.kind = Kind::staircase;
    in.exponents = std::move(exponents);
    in.echo = "staircase";
    for (long e : in.exponents) in.echo += " " + std::to_string(e);
    return in;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long parse_long(const std::string& tok) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        fail(Errc::ParseError, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(Errc::ParseError, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

KnotInput KnotInput::parse_line(std::string_view line) {
    const std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) fail(Errc::ParseError, "empty knot input");
    const std::string& head = toks[0];
    if (head == "torus") {
        if (toks.size() != 3) fail(Errc::ParseError, "torus takes exactly two integers");
        return torus(parse_long(toks[1]), parse_long(toks[2]));
    }
    if (head == "alexander") {
        const auto pos = line.find("alexander");
        std::string rest{line.substr(pos + 9)};
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
            rest.erase(rest.begin());
        if (rest.empty()) fail(Errc::ParseError, "alexander takes a polynomial");
        return alexander(std::move(rest));
    }
    if (head == "staircase") {
        if (toks.size() < 2) fail(Errc::ParseError, "staircase takes at least one exponent");
        std::vector<long> exps;
        for (std::size_t i = 1; i < toks.size(); ++i) exps.push_back(parse_long(toks[i]));
        return staircase(std::move(exps));
    }
    fail(Errc::ParseError, "unknown input kind '" + head + "' (expected torus, alexander, or staircase)");
}

Report run(const KnotInput& input, const RunOptions& options) {
    Report rep;
    rep.input = input.echo;
    rep.c_plus = options.c_plus;
    rep.c_minus = options.c_minus;

    switch (input.kind) {
        case KnotInput::Kind::torus:
            rep.alexander = torus_knot_alexander(input.p, input.q);
            rep.spec = lspace_decompose(rep.alexander);
            break;
        case KnotInput::Kind::alexander:
            rep.alexander = normalize_symmetric(LaurentPoly::parse(input.polynomial_text));
            rep.spec = lspace_decompose(rep.alexander);
            break;
        case KnotInput::Kind::staircase:
            rep.spec = StaircaseSpec(input.exponents);
            rep.alexander = reconstruct(rep.spec);
            break;
    }

    const Staircase st = build_staircase(rep.spec);
    const D1Pair d1 = extract_d1(st);
    rep.dim_khi = static_cast<long>(st.vertices.dim());
    rep.khi_graded_dims = st.vertices.graded_dims();

    const ConeReport cone_rep = isharp_dim(rep.spec, options.c_plus, options.c_minus);
    rep.rank_d1 = cone_rep.rank;
    rep.dim_isharp_c = cone_rep.dim_homology;

    // The certificate is issued for the same scaled sum that the cone used,
    // so its rank and the reported rank agree by construction.
    rep.torsion =
        certify_torsion(st.vertices, options.c_plus * d1.plus, options.c_minus * d1.minus);
    rep.f2_lower_bound = rep.torsion.f2_lower_bound;

    const HFStaircase model = build_hf_model(rep.spec);
    rep.hfk_sharp_report = hfk_sharp(model);
    rep.hfk_prime2_dim = hfk_prime2(model, Field::rational).dim_homology;
    rep.model_check = conjecture_cone_comparison(rep.spec);

    const GradedDimProfile profile = profile_from_module(st.vertices);
    if (profile.top > 0) rep.next_to_top = next_to_top_verdict(profile, rep.dim_isharp_c);
    return rep;
}

Json report_to_json(const Report& r) {
    Json out;
    out["schema"] = "1";
    out["input"] = r.input;
    out["alexander"] = r.alexander.to_string();
    out["alexander_coefficients"] = laurent_to_json(r.alexander);
    out["staircase_exponents"] = r.spec.exponents;
    out["dim_khi"] = r.dim_khi;
    Json graded = Json::array();
    for (auto it = r.khi_graded_dims.rbegin(); it != r.khi_graded_dims.rend(); ++it)
        graded.push_back(Json::array({it->first, it->second}));
    out["khi_graded_dims"] = std::move(graded);
    out["c_plus"] = rat_to_string(r.c_plus);
    out["c_minus"] = rat_to_string(r.c_minus);
    out["rank_d1"] = r.rank_d1;
    out["dim_isharp_c"] = r.dim_isharp_c;
    out["f2_lower_bound"] = r.f2_lower_bound;
    out["torsion"] = certificate_to_json(r.torsion);
    Json sharp;
    sharp["free_rank"] = r.hfk_sharp_report.dim_homology;
    Json torsion = Json::array();
    for (const Int& t : r.hfk_sharp_report.torsion_summands)
        torsion.push_back(static_cast<std::int64_t>(t));
    sharp["torsion_summands"] = std::move(torsion);
    sharp["model_convention"] = hf_model_convention();
    out["hfk_sharp"] = std::move(sharp);
    out["hfk_prime2_dim"] = r.hfk_prime2_dim;
    out["model_check"] = model_comparison_to_json(r.model_check);
    if (r.next_to_top)
        out["next_to_top"] = *r.next_to_top == NextToTop::forces_nonvanishing
                                 ? "forces_nonvanishing"
                                 : "criterion_not_met";
    else
        out["next_to_top"] = "degenerate_genus";
    return out;
}

std::string report_to_table(const Report& r) {
    std::ostringstream os;
    auto row = [&os](const std::string& key, const std::string& value) {
        os << key;
        for (std::size_t i = key.size(); i < 22; ++i) os << ' ';
        os << ": " << value << "\n";
    };

    row("input", r.input);
    row("alexander", r.alexander.to_string());
    {
        std::string s = "[";
        for (std::size_t i = 0; i < r.spec.exponents.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(r.spec.exponents[i]);
        }
        row("staircase exponents", s + "]");
    }
    row("dim KHI", std::to_string(r.dim_khi));
    {
        std::string s;
        for (auto it = r.khi_graded_dims.rbegin(); it != r.khi_graded_dims.rend(); ++it) {
            if (!s.empty()) s += "  ";
            s += std::to_string(it->first) + ":" + std::to_string(it->second);
        }
        row("KHI graded dims", s);
    }
    row("scalars c+, c-", rat_to_string(r.c_plus) + ", " + rat_to_string(r.c_minus));
    row("rank d1", std::to_string(r.rank_d1));
    row("dim I#(C)", std::to_string(r.dim_isharp_c));
    row("F2 lower bound", std::to_string(r.f2_lower_bound));
    row("torsion verdict", r.torsion.verdict == TorsionVerdict::torsion_proved
                               ? "torsion_proved"
                               : "inconclusive");
    for (const LedgerLine& line : r.torsion.ledger) {
        os << "    " << line.claim << ": " << line.lhs << " " << line.rel << " " << line.rhs
           << (line.holds ? "" : "  [fails]") << "\n";
    }
    row("HFK# free rank", std::to_string(r.hfk_sharp_report.dim_homology));
    {
        std::string s;
        for (const Int& t : r.hfk_sharp_report.torsion_summands) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.str();
        }
        row("HFK# torsion", s.empty() ? "none" : s);
    }
    row("HFK'2 dim", std::to_string(r.hfk_prime2_dim));
    row("model check", (r.model_check.dims_equal && r.model_check.graded_breakdown_equal
                            ? "equal ("
                            : "MISMATCH (") +
                           std::to_string(r.model_check.instanton_dim) + " vs " +
                           std::to_string(r.model_check.hf_dim) + ")");
    if (r.next_to_top)
        row("next-to-top", *r.next_to_top == NextToTop::forces_nonvanishing
                               ? "forces_nonvanishing"
                               : "criterion_not_met");
    else
        row("next-to-top", "degenerate_genus");
    return os.str();
}

std::vector<BatchEntry> run_batch(const std::vector<std::string>& lines,
                                  const RunOptions& options, unsigned workers) {
    std::vector<std::string> inputs;
    for (const std::string& line : lines) {
        std::string_view sv = line;
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
            sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;
        inputs.emplace_back(sv);
    }

    std::vector<BatchEntry> results(inputs.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(inputs.size(), 1));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= inputs.size()) return;
            BatchEntry& entry = results[i];
            entry.input = inputs[i];
            try {
                entry.report = run(KnotInput::parse_line(inputs[i]), options);
            } catch (const Error& e) {
                entry.error = e.code();
                entry.error_message = e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    return results;
}

}  // namespace isharp
