#pragma once

#include "isharp/graded.hpp"
#include "isharp/laurent.hpp"

namespace isharp::oracles {

// Independent verification routes for the property suites. Everything here
// deliberately avoids the production algorithms: ranks come from plain
// rational row reduction instead of fraction-free elimination, cone
// dimensions from the explicit two-step complex, and the triangle test from
// exhaustive search. Production code must never call into this namespace
// for its own answers.

// Textbook Gaussian elimination over the rationals.
long rank_naive(const RatMat& m);

// Builds the explicit cone total complex of f (degree 1 = domain,
// degree 0 = codomain), checks the differential squares to zero, and sums
// dim ker - rank over the degrees.
long cone_homology_dim(const GradedMap& f);

// Exhaustive search for ranks (ra, rb, rc) realizing an exact triangle on
// dimensions (da, db, dc).
bool triangle_exists_by_search(long da, long db, long dc);

// Explicit kernel/image bases at every vertex of the six-term sequence of
// cone(f) -> cone(gf) -> cone(g); true when incoming image equals outgoing
// kernel everywhere (as subspaces, compared by spans).
bool octahedral_exact_by_bases(const GradedMap& f, const GradedMap& g);

// Rank of c+ d1+ + c- d1- assembled directly from the arrow list of the
// zig-zag, bypassing the staircase module's matrix extraction.
long staircase_rank_bruteforce(const StaircaseSpec& spec);

// 2-torsion happens exactly when some step length is 1; read straight off
// the exponent ladder without any linear algebra.
bool has_unit_step(const StaircaseSpec& spec);

}  // namespace isharp::oracles
