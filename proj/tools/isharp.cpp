// Command-line front end: turns torus-knot parameters, Alexander
// polynomials, or staircase exponent ladders into singular instanton
// homology reports, and drives the seeded property suites.
//
// Exit codes: 0 success, 1 parse/usage errors, 2 non-L-space input.

#include "isharp/report.hpp"
#include "isharp/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace isharp;

struct CommonOptions {
    std::string c_plus = "1";
    std::string c_minus = "1";
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--c-plus", opts.c_plus, "Scalar in front of d1+ (nonzero rational)")
        ->capture_default_str();
    cmd->add_option("--c-minus", opts.c_minus, "Scalar in front of d1- (nonzero rational)")
        ->capture_default_str();
    cmd->add_flag("--json", opts.json, "Emit the report as JSON instead of a table");
}

RunOptions run_options(const CommonOptions& opts) {
    RunOptions out;
    out.c_plus = parse_rat(opts.c_plus);
    out.c_minus = parse_rat(opts.c_minus);
    return out;
}

int emit(const Report& report, bool json) {
    if (json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_table(report);
    return 0;
}

int error_exit(const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::NotLSpaceForm ? 2 : 1;
}

int run_single(const KnotInput& input, const CommonOptions& opts) {
    try {
        return emit(run(input, run_options(opts)), opts.json);
    } catch (const Error& e) {
        return error_exit(e);
    }
}

int run_batch_file(const std::string& path, const CommonOptions& opts, unsigned jobs) {
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open batch file '" << path << "'\n";
        return 1;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) lines.push_back(line);

    std::vector<BatchEntry> entries;
    try {
        entries = run_batch(lines, run_options(opts), jobs);
    } catch (const Error& e) {
        return error_exit(e);
    }

    int exit_code = 0;
    if (opts.json) {
        Json out = Json::array();
        for (const BatchEntry& entry : entries) {
            if (entry.report) {
                out.push_back(report_to_json(*entry.report));
            } else {
                out.push_back(Json{{"schema", "1"},
                                   {"input", entry.input},
                                   {"error", errc_name(*entry.error)},
                                   {"message", entry.error_message}});
                exit_code = std::max(exit_code, *entry.error == Errc::NotLSpaceForm ? 2 : 1);
            }
        }
        std::cout << out.dump(2) << "\n";
    } else {
        bool first = true;
        for (const BatchEntry& entry : entries) {
            if (!first) std::cout << "\n";
            first = false;
            if (entry.report) {
                std::cout << report_to_table(*entry.report);
            } else {
                std::cout << "input                 : " << entry.input << "\n"
                          << "error                 : " << entry.error_message << "\n";
                exit_code = std::max(exit_code, *entry.error == Errc::NotLSpaceForm ? 2 : 1);
            }
        }
    }
    return exit_code;
}

// The alexander subcommand is routed around CLI11 because a polynomial like
// "-t + 3 - t^-1" starts with a dash and would be eaten as an option.
// Non-flag arguments are joined with spaces, so the polynomial may be passed
// quoted or as bare tokens.
int alexander_main(int argc, char** argv) {
    CommonOptions opts;
    std::string polynomial;
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        auto value_of = [&](const char* name) -> std::string {
            const std::string prefix = std::string(name) + "=";
            if (arg.rfind(prefix, 0) == 0) return arg.substr(prefix.size());
            if (i + 1 >= argc) {
                std::cerr << "error: " << name << " needs a value\n";
                std::exit(1);
            }
            return argv[++i];
        };
        if (arg == "--json") {
            opts.json = true;
        } else if (arg == "--c-plus" || arg.rfind("--c-plus=", 0) == 0) {
            opts.c_plus = value_of("--c-plus");
        } else if (arg == "--c-minus" || arg.rfind("--c-minus=", 0) == 0) {
            opts.c_minus = value_of("--c-minus");
        } else if (arg == "--help" || arg == "-h") {
            std::cout << "Usage: isharp alexander <polynomial> [--c-plus R] [--c-minus R] "
                         "[--json]\n  e.g. isharp alexander \"t - 1 + t^-1\"\n";
            return 0;
        } else {
            if (!polynomial.empty()) polynomial += " ";
            polynomial += arg;
        }
    }
    if (polynomial.empty()) {
        std::cerr << "error: alexander takes a polynomial, e.g. \"t - 1 + t^-1\"\n";
        return 1;
    }
    return run_single(KnotInput::alexander(polynomial), opts);
}

int run_selftest(const std::string& suite, std::uint64_t seed, long cases) {
    std::vector<SuiteResult> results;
    try {
        results = run_selftests(suite, seed,
                                cases > 0 ? std::optional<long>(cases) : std::nullopt);
    } catch (const Error& e) {
        return error_exit(e);
    }
    bool all_passed = true;
    for (const SuiteResult& r : results) {
        std::cout << r.name << ": " << r.cases << " cases, " << r.failures << " failures -> "
                  << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const std::string& msg : r.messages) std::cout << "    " << msg << "\n";
        all_passed = all_passed && r.passed();
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2 && std::string(argv[1]) == "alexander") return alexander_main(argc, argv);

    CLI::App app{
        "Singular instanton homology of L-space knots from Alexander data:\n"
        "staircase models, mapping-cone dimensions, 2-torsion certificates,\n"
        "and the matching Heegaard Floer cone models."};
    app.require_subcommand(1);

    long p = 0, q = 0;
    std::string polynomial;
    std::vector<long> exponents;
    std::string batch_path;
    unsigned jobs = 0;
    CommonOptions torus_opts, alexander_opts, staircase_opts, batch_opts;

    CLI::App* torus = app.add_subcommand("torus", "Report for the (p,q) torus knot");
    torus->add_option("p", p, "First parameter (>= 2)")->required();
    torus->add_option("q", q, "Second parameter (>= 2, coprime to p)")->required();
    add_common(torus, torus_opts);

    CLI::App* alexander =
        app.add_subcommand("alexander", "Report for an Alexander polynomial in L-space form");
    alexander->add_option("polynomial", polynomial, "e.g. \"t - 1 + t^-1\"")->required();
    add_common(alexander, alexander_opts);

    CLI::App* staircase =
        app.add_subcommand("staircase", "Report for an exponent ladder 0 n1 n2 ...");
    staircase->add_option("exponents", exponents, "Strictly increasing, starting at 0")
        ->required()
        ->expected(-1);
    add_common(staircase, staircase_opts);

    CLI::App* batch = app.add_subcommand(
        "batch", "Run every input line of a file ('#' comments allowed), in input order");
    batch->add_option("file", batch_path, "One input per line, e.g. 'torus 2 3'")->required();
    batch->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
    add_common(batch, batch_opts);

    std::string suite = "all";
    std::uint64_t seed = 42;
    long cases = 0;
    CLI::App* selftest = app.add_subcommand(
        "selftest", "Run the seeded property suites (cone, octahedral, snf, staircase, counting)");
    selftest->add_option("suite", suite, "Suite name or 'all'")->capture_default_str();
    selftest->add_option("--seed", seed, "Random seed")->capture_default_str();
    selftest->add_option("--cases", cases, "Case count override (0 = suite default)");

    CLI11_PARSE(app, argc, argv);

    if (torus->parsed()) return run_single(KnotInput::torus(p, q), torus_opts);
    if (alexander->parsed()) return run_single(KnotInput::alexander(polynomial), alexander_opts);
    if (staircase->parsed())
        return run_single(KnotInput::staircase(exponents), staircase_opts);
    if (batch->parsed()) return run_batch_file(batch_path, batch_opts, jobs);
    if (selftest->parsed()) return run_selftest(suite, seed, cases);
    return 1;
}
