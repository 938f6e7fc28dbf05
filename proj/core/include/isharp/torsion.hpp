#pragma once

#include "isharp/cone.hpp"
#include "isharp/graded.hpp"

#include <string>
#include <vector>

namespace isharp {

// One applied step of an inequality chain. The anchor names the principle
// the step rests on; "axiom:" prefixed steps are facts about instanton
// homology taken as input, everything else is recomputed from the stored
// certificate numbers.
struct LedgerLine {
    std::string claim;
    long lhs = 0;
    std::string rel;  // "=", ">=", ">"
    long rhs = 0;
    std::string anchor;
    bool holds = false;
};

enum class TorsionVerdict { torsion_proved, inconclusive };

/**
 * Machine-checkable record of the 2-torsion argument
 *
 *   dim I#(F2) >= 2 dim KHI = dim I#(C) + 2 rank(d1+ + d1-) > dim I#(C),
 *
 * which proves 2-torsion in the integral homology exactly when the rank is
 * positive. Invariants: dim_isharp_c = 2 dim_khi - 2 rank_f, and the verdict
 * is torsion_proved iff rank_f >= 1.
 */
struct TorsionCertificate {
    long dim_khi = 0;
    long rank_f = 0;
    long dim_isharp_c = 0;
    long f2_lower_bound = 0;  // 2 * dim_khi
    TorsionVerdict verdict = TorsionVerdict::inconclusive;
    std::vector<LedgerLine> ledger;
};

// ShiftMismatch unless the maps declare shifts +1 and -1; BadParameter
// unless both are endomorphisms of v.
TorsionCertificate certify_torsion(const GradedModule& v, const GradedMap& d1_plus,
                                   const GradedMap& d1_minus);

// Graded dimension profile of a knot homology: top grading g >= 0 and the
// dimension of every graded piece, supported in [-g, g]. A knot profile is
// symmetric with odd total dimension; validate_knot_profile enforces that.
struct GradedDimProfile {
    long top = 0;
    std::map<long, long> dims;  // nonzero entries only

    long total() const;
    long at(long grading) const;
    void validate_knot_profile() const;  // PreconditionFailed on violation
};

GradedDimProfile profile_from_module(const GradedModule& v);

enum class NextToTop { forces_nonvanishing, criterion_not_met };

/**
 * The next-to-top nonvanishing criterion: when
 * dim I# <= total + 2 * dims(top), the grading top-1 summand must be
 * nonzero. DegenerateGenus when top = 0, where no next-to-top grading
 * exists.
 */
NextToTop next_to_top_verdict(const GradedDimProfile& profile, long dim_isharp);

/**
 * Verifies the counting argument behind the next-to-top criterion on a
 * middle band A (gradings in [2-g, g-2]) for an endomorphism pair with
 * delta o delta_lambda = 0:
 *
 *   dim A - dim ker(delta|A) = rank(delta|A)  and
 *   rank(delta_lambda|A) <= dim ker(delta|A),
 *
 * and, when additionally rank(delta|A) = rank(delta_lambda|A) (an equality
 * that holds in the geometric setting but is checked rather than assumed
 * here), dim ker(delta|A) >= (dim A + 1)/2 and
 * dim H(cone delta) >= total + 2 dims(g) + 1.
 *
 * PreconditionFailed names the first violated hypothesis.
 */
struct CountingLemmaReport {
    long dim_a = 0;
    long rank_delta_a = 0;
    long ker_delta_a = 0;
    long rank_delta_lambda_a = 0;
    bool annihilation_bound_holds = false;  // rank(delta_lambda|A) <= ker(delta|A)
    bool rank_equality_holds = false;       // rank(delta|A) == rank(delta_lambda|A)
    long ker_lower_bound = 0;               // (dim A + 1) / 2
    bool ker_bound_holds = false;
    long dim_cone_delta = 0;
    long cone_lower_bound = 0;  // total + 2 dims(g) + 1
    bool cone_bound_holds = false;
    bool chain_verified = false;  // the full displayed chain held
};

CountingLemmaReport counting_lemma_check(const GradedModule& v, const GradedMap& delta,
                                         const GradedMap& delta_lambda, long g);

}  // namespace isharp
