#pragma once

#include "isharp/cone.hpp"
#include "isharp/graded.hpp"
#include "isharp/laurent.hpp"

#include <vector>

namespace isharp {

// Directed edge between staircase vertices. A '+' arrow raises the Alexander
// grading of its source by its length, a '-' arrow lowers it.
struct Arrow {
    std::size_t from = 0;
    std::size_t to = 0;
    long length = 0;
    int sign = +1;  // +1 or -1

    bool operator==(const Arrow&) const = default;
};

/**
 * Zig-zag model of the instanton knot homology of an L-space knot: one
 * generator per grading n_k, n_{k-1}, ..., n_1, 0, -n_1, ..., -n_k (that
 * order is the basis), and 2k arrows between consecutive vertices whose
 * lengths read m_k, ..., m_1, m_1, ..., m_k from the top, alternating
 * '-', '+', '-', ... so that interior vertices are alternately two-arrow
 * sources and two-arrow sinks.
 */
struct Staircase {
    StaircaseSpec spec;
    GradedModule vertices;
    std::vector<Arrow> arrows;
};

Staircase build_staircase(const StaircaseSpec& spec);

struct D1Pair {
    GradedMap plus;   // declared shift +1
    GradedMap minus;  // declared shift -1
};

// Keeps exactly the length-1 arrows of each sign as matrix entries equal
// to 1; longer arrows only witness higher differentials and are dropped.
D1Pair extract_d1(const Staircase& s);

/**
 * Dimension of the singular instanton homology over C as the mapping cone
 * of c_plus * d1+ + c_minus * d1- acting on the 2k+1 staircase generators:
 * dim_homology = 2(2k+1) - 2 rank. Both scalars must be nonzero
 * (ZeroScalar otherwise); the reported rank does not depend on them.
 */
ConeReport isharp_dim(const StaircaseSpec& spec, const Rat& c_plus, const Rat& c_minus);

}  // namespace isharp
