#pragma once

#include "isharp/hf_model.hpp"
#include "isharp/json_io.hpp"
#include "isharp/laurent.hpp"
#include "isharp/staircase.hpp"
#include "isharp/torsion.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace isharp {

// One knot described on the command line or on a batch-file line:
// "torus p q", "alexander <polynomial>", or "staircase n0 n1 ...".
struct KnotInput {
    enum class Kind { torus, alexander, staircase };

    Kind kind = Kind::torus;
    long p = 0, q = 0;
    std::string polynomial_text;
    std::vector<long> exponents;
    std::string echo;

    static KnotInput torus(long p, long q);
    static KnotInput alexander(std::string text);
    static KnotInput staircase(std::vector<long> exponents);
    // Batch-line grammar; ParseError with the offending token.
    static KnotInput parse_line(std::string_view line);
};

struct RunOptions {
    Rat c_plus = 1;
    Rat c_minus = 1;
};

// Everything the pipeline knows about one knot. All numeric fields satisfy
// 2 dim_khi = dim_isharp_c + 2 rank_d1.
struct Report {
    std::string input;
    LaurentPoly alexander;
    StaircaseSpec spec{std::vector<long>{0}};
    long dim_khi = 0;
    std::map<long, long> khi_graded_dims;
    Rat c_plus = 1, c_minus = 1;
    long rank_d1 = 0;
    long dim_isharp_c = 0;
    long f2_lower_bound = 0;
    TorsionCertificate torsion;
    ConeReport hfk_sharp_report;
    long hfk_prime2_dim = 0;
    ModelComparison model_check;
    std::optional<NextToTop> next_to_top;  // empty when the genus is zero
};

Report run(const KnotInput& input, const RunOptions& options);

Json report_to_json(const Report& r);
std::string report_to_table(const Report& r);

// A batch entry either produced a report or failed with a recorded error.
struct BatchEntry {
    std::string input;
    std::optional<Report> report;
    std::optional<Errc> error;
    std::string error_message;
};

// Skips blank and '#' comment lines; fans the remaining lines out to a
// worker pool and returns results in input order.
std::vector<BatchEntry> run_batch(const std::vector<std::string>& lines,
                                  const RunOptions& options, unsigned workers = 0);

}  // namespace isharp
