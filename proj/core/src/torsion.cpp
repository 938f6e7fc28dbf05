#include "isharp/torsion.hpp"

#include <cstdlib>
#include <stdexcept>

namespace isharp {

TorsionCertificate certify_torsion(const GradedModule& v, const GradedMap& d1_plus,
                                   const GradedMap& d1_minus) {
    if (d1_plus.domain() != v || d1_plus.codomain() != v || d1_minus.domain() != v ||
        d1_minus.codomain() != v)
        fail(Errc::BadParameter, "d1 maps must be endomorphisms of the given module");
    if (d1_plus.declared_shift() != std::optional<long>(1))
        fail(Errc::ShiftMismatch, "d1+ must declare shift +1");
    if (d1_minus.declared_shift() != std::optional<long>(-1))
        fail(Errc::ShiftMismatch, "d1- must declare shift -1");

    TorsionCertificate cert;
    cert.dim_khi = static_cast<long>(v.dim());
    cert.rank_f = rank(d1_plus + d1_minus);
    cert.dim_isharp_c = 2 * cert.dim_khi - 2 * cert.rank_f;
    cert.f2_lower_bound = 2 * cert.dim_khi;
    cert.verdict = cert.rank_f >= 1 ? TorsionVerdict::torsion_proved : TorsionVerdict::inconclusive;
    if (cert.dim_isharp_c % 2 != 0) throw std::logic_error("cone dimension parity broken");

    cert.ledger.push_back({"dim I#(F2) >= 2 dim KHI", cert.f2_lower_bound, ">=",
                           2 * cert.dim_khi,
                           "axiom: reduced-theory doubling over F2 and universal coefficients",
                           true});
    cert.ledger.push_back({"2 dim KHI = dim I#(C) + 2 rank(d1+ + d1-)", 2 * cert.dim_khi, "=",
                           cert.dim_isharp_c + 2 * cert.rank_f, "mapping-cone dimension law",
                           2 * cert.dim_khi == cert.dim_isharp_c + 2 * cert.rank_f});
    cert.ledger.push_back({"dim I#(F2) lower bound > dim I#(C)", cert.f2_lower_bound, ">",
                           cert.dim_isharp_c,
                           "positive rank forces 2-torsion via universal coefficients",
                           cert.f2_lower_bound > cert.dim_isharp_c});
    return cert;
}

long GradedDimProfile::total() const {
    long t = 0;
    for (const auto& [g, d] : dims) t += d;
    return t;
}

long GradedDimProfile::at(long grading) const {
    const auto it = dims.find(grading);
    return it == dims.end() ? 0 : it->second;
}

void GradedDimProfile::validate_knot_profile() const {
    if (dims.empty()) fail(Errc::PreconditionFailed, "empty graded profile");
    for (const auto& [g, d] : dims) {
        if (d <= 0) fail(Errc::PreconditionFailed, "non-positive graded dimension stored");
        if (g > top || g < -top)
            fail(Errc::PreconditionFailed, "graded dimension outside [-top, top]");
        if (at(-g) != d)
            fail(Errc::PreconditionFailed,
                 "profile is not symmetric at grading " + std::to_string(g));
    }
    if (at(top) == 0) fail(Errc::PreconditionFailed, "top grading has dimension zero");
    if (total() % 2 == 0) fail(Errc::PreconditionFailed, "total dimension must be odd");
}

GradedDimProfile profile_from_module(const GradedModule& v) {
    GradedDimProfile p;
    p.dims = v.graded_dims();
    p.top = 0;
    for (const auto& [g, d] : p.dims) p.top = std::max(p.top, std::labs(g));
    return p;
}

NextToTop next_to_top_verdict(const GradedDimProfile& profile, long dim_isharp) {
    profile.validate_knot_profile();
    if (dim_isharp < 0) fail(Errc::BadParameter, "negative homology dimension");
    if (profile.top == 0)
        fail(Errc::DegenerateGenus, "top grading 0 has no next-to-top grading");
    return dim_isharp <= profile.total() + 2 * profile.at(profile.top)
               ? NextToTop::forces_nonvanishing
               : NextToTop::criterion_not_met;
}

namespace {

// Entries of an endomorphism matrix must connect gradings differing by
// exactly 1 (a sum of homogeneous +-1 pieces).
bool shifts_by_one(const GradedMap& f) {
    const RatMat& m = f.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) == 0) continue;
            const long d = f.codomain().grading(r) - f.domain().grading(c);
            if (d != 1 && d != -1) return false;
        }
    return true;
}

bool kills_grading(const GradedMap& f, long grading) {
    const RatMat& m = f.matrix();
    for (std::size_t c : f.domain().indices_at(grading))
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0) return false;
    return true;
}

}  // namespace

CountingLemmaReport counting_lemma_check(const GradedModule& v, const GradedMap& delta,
                                         const GradedMap& delta_lambda, long g) {
    if (!delta.is_endomorphism() || delta.domain() != v)
        fail(Errc::PreconditionFailed, "delta is not an endomorphism of the given module");
    if (!delta_lambda.is_endomorphism() || delta_lambda.domain() != v)
        fail(Errc::PreconditionFailed, "delta_lambda is not an endomorphism of the given module");
    if (!mul(delta.matrix(), delta_lambda.matrix()).is_zero())
        fail(Errc::PreconditionFailed, "delta o delta_lambda is not zero");
    if (!shifts_by_one(delta)) fail(Errc::PreconditionFailed, "delta has an entry of shift != +-1");
    if (!shifts_by_one(delta_lambda))
        fail(Errc::PreconditionFailed, "delta_lambda has an entry of shift != +-1");
    if (g < 1) fail(Errc::PreconditionFailed, "top grading must be positive");

    const GradedDimProfile profile = profile_from_module(v);
    if (profile.top > g)
        fail(Errc::PreconditionFailed, "module has generators above the stated top grading");
    if (profile.at(g) != profile.at(-g))
        fail(Errc::PreconditionFailed, "top and bottom graded dimensions differ");
    if (profile.at(g - 1) != 0 || profile.at(1 - g) != 0)
        fail(Errc::PreconditionFailed, "next-to-top graded dimension is not zero");
    if (!kills_grading(delta, g) || !kills_grading(delta, -g))
        fail(Errc::PreconditionFailed, "delta does not kill the top/bottom summands");

    // Middle band A: everything strictly between the +-(g-1) gradings.
    std::vector<std::size_t> band;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const long gr = v.grading(i);
        if (gr >= 2 - g && gr <= g - 2) band.push_back(i);
    }
    CountingLemmaReport rep;
    rep.dim_a = static_cast<long>(band.size());
    if (rep.dim_a % 2 == 0) fail(Errc::PreconditionFailed, "middle band dimension must be odd");

    // All other generators sit at +-g, so delta and delta_lambda preserve A:
    // entries from band columns into non-band rows would need shift >= 2.
    const RatMat delta_a = select(delta.matrix(), band, band);
    const RatMat lambda_a = select(delta_lambda.matrix(), band, band);

    rep.rank_delta_a = rank(delta_a);
    rep.ker_delta_a = rep.dim_a - rep.rank_delta_a;
    rep.rank_delta_lambda_a = rank(lambda_a);
    rep.annihilation_bound_holds = rep.rank_delta_lambda_a <= rep.ker_delta_a;
    rep.rank_equality_holds = rep.rank_delta_a == rep.rank_delta_lambda_a;
    rep.ker_lower_bound = (rep.dim_a + 1) / 2;
    rep.ker_bound_holds = rep.ker_delta_a >= rep.ker_lower_bound;

    const ConeReport cone_rep = cone(delta, Ring::rational);
    rep.dim_cone_delta = cone_rep.dim_homology;
    rep.cone_lower_bound = profile.total() + 2 * profile.at(g) + 1;
    rep.cone_bound_holds = rep.dim_cone_delta >= rep.cone_lower_bound;
    rep.chain_verified = rep.annihilation_bound_holds && rep.rank_equality_holds &&
                         rep.ker_bound_holds && rep.cone_bound_holds;
    return rep;
}

}  // namespace isharp
