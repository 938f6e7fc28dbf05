#include "isharp/cone.hpp"

#include <stdexcept>

namespace isharp {

namespace {

std::map<long, long> graded_kernel(const GradedMap& f) {
    std::map<long, long> out;
    for (const auto& [g, dim] : f.domain().graded_dims()) {
        const auto cols = f.domain().indices_at(g);
        const long kd = dim - rank(select_cols(f.matrix(), cols));
        if (kd > 0) out[g] = kd;
    }
    return out;
}

std::map<long, long> graded_cokernel(const GradedMap& f, long rank_f) {
    std::map<long, long> out;
    const RatMat& m = f.matrix();
    for (const auto& [g, dim] : f.codomain().graded_dims()) {
        RatMat inclusion(m.rows(), static_cast<std::size_t>(dim));
        std::size_t c = 0;
        for (std::size_t i : f.codomain().indices_at(g)) inclusion(i, c++) = 1;
        const long cd = rank(hcat(m, inclusion)) - rank_f;
        if (cd > 0) out[g] = cd;
    }
    return out;
}

// Total complex of the cone of m : A -> B, ordered [degree-1 block | degree-0
// block]; the only differential block sends the domain copy into the codomain.
RatMat cone_differential(const RatMat& m) {
    const std::size_t na = m.cols();
    const std::size_t nb = m.rows();
    RatMat d(na + nb, na + nb);
    for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < na; ++c) d(na + r, c) = m(r, c);
    return d;
}

// Block-diagonal chain map between cone total complexes: top acts on the
// degree-1 parts, bottom on the degree-0 parts.
RatMat cone_chain_map(const RatMat& top, const RatMat& bottom) {
    RatMat out(top.rows() + bottom.rows(), top.cols() + bottom.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c)
            out(top.rows() + r, top.cols() + c) = bottom(r, c);
    return out;
}

}  // namespace

ConeReport cone(const GradedMap& f, Ring ring) {
    ConeReport rep;
    rep.dim_domain = static_cast<long>(f.domain().dim());
    rep.dim_codomain = static_cast<long>(f.codomain().dim());
    rep.rank = rank(f.matrix());
    rep.dim_homology = rep.dim_domain + rep.dim_codomain - 2 * rep.rank;
    rep.graded_kernel_dims = graded_kernel(f);
    rep.graded_cokernel_dims = graded_cokernel(f, rep.rank);
    if (ring == Ring::integer) {
        rep.torsion_summands = nonunit_divisors(smith_normal_form(to_int(f.matrix())).divisors);
        if (static_cast<long>(rep.torsion_summands.size()) > rep.rank)
            throw std::logic_error("more torsion summands than the rank allows");
    }
    return rep;
}

OctahedralReport octahedral_verify(const GradedMap& f, const GradedMap& g) {
    if (f.codomain() != g.domain())
        fail(Errc::CompositionMismatch, "octahedral input maps are not composable");

    const RatMat& fm = f.matrix();
    const RatMat& gm = g.matrix();
    const RatMat gf = mul(gm, fm);
    const long dim_x = static_cast<long>(f.domain().dim());
    const long dim_y = static_cast<long>(f.codomain().dim());
    const long dim_z = static_cast<long>(g.codomain().dim());

    // Assemble the three cone complexes and the canonical chain maps
    // u = (id_X, g) : cone(f) -> cone(gf) and v = (f, id_Z) :
    // cone(gf) -> cone(g); then machine-check that the assembled blocks
    // commute with the cone differentials.
    const RatMat d_cf = cone_differential(fm);
    const RatMat d_cgf = cone_differential(gf);
    const RatMat d_cg = cone_differential(gm);
    if (!mul(d_cf, d_cf).is_zero() || !mul(d_cgf, d_cgf).is_zero() || !mul(d_cg, d_cg).is_zero())
        throw std::logic_error("cone differential does not square to zero");

    const RatMat u = cone_chain_map(RatMat::identity(f.domain().dim()), gm);
    const RatMat v = cone_chain_map(fm, RatMat::identity(g.codomain().dim()));
    if (mul(d_cgf, u) != mul(u, d_cf)) throw std::logic_error("u is not a chain map");
    if (mul(d_cg, v) != mul(v, d_cgf)) throw std::logic_error("v is not a chain map");

    const long rank_f = rank(fm);
    const long rank_g = rank(gm);
    const long rank_gf = rank(gf);

    const long ker_f = dim_x - rank_f;
    const long ker_gf = dim_x - rank_gf;
    const long ker_g = dim_y - rank_g;
    const long coker_f = dim_y - rank_f;
    const long coker_gf = dim_z - rank_gf;
    const long coker_g = dim_z - rank_g;

    // Ranks of the induced maps on cone homology, degree by degree. The
    // connecting map ker g -> coker f sends a kernel vector to its class
    // modulo im f.
    const RatMat k_f = nullspace_basis(fm);
    const RatMat k_gf = nullspace_basis(gf);
    const RatMat k_g = nullspace_basis(gm);

    const long rank_u1 = rank(k_f);
    const long rank_v1 = rank(mul(fm, k_gf));
    const long rank_del = rank(hcat(fm, k_g)) - rank_f;
    const long rank_u0 = rank_g - rank_gf;
    const long rank_v0 = dim_z - rank_g;

    OctahedralReport rep;
    rep.dim_cone_f = ker_f + coker_f;
    rep.dim_cone_gf = ker_gf + coker_gf;
    rep.dim_cone_g = ker_g + coker_g;
    rep.rank_f_to_gf = rank_u1 + rank_u0;
    rep.rank_gf_to_g = rank_v1 + rank_v0;
    rep.rank_connecting = rank_del;

    auto vertex = [&](std::string name, long dim, long in, long out) {
        rep.vertices.push_back({std::move(name), dim, in, out, in + out == dim});
    };
    vertex("H1(cone f)", ker_f, 0, rank_u1);
    vertex("H1(cone gf)", ker_gf, rank_u1, rank_v1);
    vertex("H1(cone g)", ker_g, rank_v1, rank_del);
    vertex("H0(cone f)", coker_f, rank_del, rank_u0);
    vertex("H0(cone gf)", coker_gf, rank_u0, rank_v0);
    vertex("H0(cone g)", coker_g, rank_v0, 0);

    rep.exact = true;
    for (const VertexCheck& vc : rep.vertices) rep.exact = rep.exact && vc.exact;
    return rep;
}

bool triangle_dims_consistent(long da, long db, long dc) {
    if (da < 0 || db < 0 || dc < 0) fail(Errc::BadParameter, "dimensions must be non-negative");
    if ((da + db + dc) % 2 != 0) return false;
    return da <= db + dc && db <= da + dc && dc <= da + db;
}

}  // namespace isharp
