#pragma once

#include "isharp/graded.hpp"

#include <string>
#include <vector>

namespace isharp {

enum class Ring { rational, integer };

/**
 * Result of a mapping-cone computation for a map f between zero-differential
 * complexes, where H(cone f) = ker f + coker f and so
 *
 *   dim_homology = dim_domain + dim_codomain - 2 * rank.
 *
 * graded_kernel_dims / graded_cokernel_dims record, per grading, the graded
 * part of the kernel (vectors supported in one grading) and of the cokernel.
 * For a homogeneous map these exhaust the kernel and cokernel; for a mixed
 * map they are the largest graded subobjects, reported separately because a
 * mixed cone carries no single grading convention.
 *
 * Over the integers, torsion_summands lists the elementary divisors > 1 of
 * the matrix; the free part of the cone homology still has dimension
 * dim_homology.
 */
struct ConeReport {
    long dim_domain = 0;
    long dim_codomain = 0;
    long rank = 0;
    long dim_homology = 0;
    std::map<long, long> graded_kernel_dims;
    std::map<long, long> graded_cokernel_dims;
    std::vector<Int> torsion_summands;
};

ConeReport cone(const GradedMap& f, Ring ring);

struct VertexCheck {
    std::string vertex;
    long dim = 0;
    long rank_in = 0;
    long rank_out = 0;
    bool exact = false;  // rank_in + rank_out == dim
};

struct OctahedralReport {
    long dim_cone_f = 0;
    long dim_cone_gf = 0;
    long dim_cone_g = 0;
    // Induced ranks on total cone homology: cone(f) -> cone(gf) -> cone(g)
    // and the degree-lowering connecting map cone(g) -> cone(f).
    long rank_f_to_gf = 0;
    long rank_gf_to_g = 0;
    long rank_connecting = 0;
    std::vector<VertexCheck> vertices;
    bool exact = false;
};

/**
 * Octahedral check for composable maps f : X -> Y, g : Y -> Z between
 * zero-differential complexes: builds the canonical chain maps
 * cone(f) -> cone(g o f) -> cone(g), verifies they commute with the cone
 * differentials, and certifies exactness of the induced triangle on homology
 * by the rank identity rank(in) + rank(out) = dim at each of the six
 * vertices of the unrolled sequence. Exactness here is a theorem; a failed
 * check indicates a computation bug, never an interesting input.
 */
OctahedralReport octahedral_verify(const GradedMap& f, const GradedMap& g);

// True iff three homology dimensions can sit in an exact triangle:
// even total and each dimension at most the sum of the other two.
bool triangle_dims_consistent(long da, long db, long dc);

}  // namespace isharp
