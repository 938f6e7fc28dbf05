#pragma once

#include "isharp/graded.hpp"
#include "isharp/laurent.hpp"
#include "isharp/rng.hpp"
#include "isharp/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isharp {

// Seeded property suites, shared between the CLI selftest subcommand and
// the test binaries. Each suite runs a fixed number of cases (overridable),
// records every violated property, and is deterministic for a given seed.
struct SuiteResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> messages;

    bool passed() const { return failures == 0; }
};

// Random graded map with uniform integer entries in [-bound, bound].
GradedMap random_graded_map(Rng& rng, std::size_t dim_domain, std::size_t dim_codomain,
                            long bound);

// Random exponent ladder with k steps and step lengths up to max_step.
StaircaseSpec random_spec(Rng& rng, std::size_t k, long max_step);

// One draw of the annihilator sampler: a symmetric odd-total profile with a
// vanishing next-to-top grading, a random +-1-shift map delta_lambda on it,
// and delta sampled from the exact solution space of delta o delta_lambda
// = 0 within the +-1-shift maps.
struct CountingSample {
    GradedModule space;
    GradedMap delta;
    GradedMap delta_lambda;
    long top = 0;
};
CountingSample sample_counting_pair(Rng& rng);

SuiteResult selftest_cone(std::uint64_t seed, long cases = 500);
SuiteResult selftest_octahedral(std::uint64_t seed, long cases = 200);
SuiteResult selftest_snf(std::uint64_t seed, long cases = 200);
SuiteResult selftest_staircase(std::uint64_t seed, long cases = 100);
SuiteResult selftest_counting(std::uint64_t seed, long cases = 300);

// suite: one of cone | octahedral | snf | staircase | counting | all.
// Empty cases means each suite's default count. BadParameter on an unknown
// suite name.
std::vector<SuiteResult> run_selftests(const std::string& suite, std::uint64_t seed,
                                       std::optional<long> cases = std::nullopt);

}  // namespace isharp
