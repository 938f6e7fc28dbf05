#include "isharp/staircase.hpp"

#include <stdexcept>
#include <string>

namespace isharp {

namespace {

void check_invariants(const Staircase& s) {
    const std::size_t n = s.vertices.dim();
    std::vector<int> outgoing(n, 0), incoming(n, 0);
    for (const Arrow& a : s.arrows) {
        const long from_g = s.vertices.grading(a.from);
        const long to_g = s.vertices.grading(a.to);
        if (a.length < 1) throw std::logic_error("staircase arrow with length < 1");
        if (to_g != from_g + a.sign * a.length)
            throw std::logic_error("staircase arrow breaks its grading shift");
        ++outgoing[a.from];
        ++incoming[a.to];
    }
    for (std::size_t i = 0; i < n; ++i) {
        const int total = outgoing[i] + incoming[i];
        const int expected = (n == 1) ? 0 : ((i == 0 || i + 1 == n) ? 1 : 2);
        if (total != expected)
            throw std::logic_error("staircase vertex " + std::to_string(i) +
                                   " has wrong arrow incidence");
        // Interior vertices alternate two-outgoing / two-incoming.
        if (total == 2 && outgoing[i] != 0 && incoming[i] != 0)
            throw std::logic_error("staircase vertex " + std::to_string(i) +
                                   " is neither a source nor a sink");
    }
}

}  // namespace

Staircase build_staircase(const StaircaseSpec& spec) {
    const std::size_t k = spec.k();
    const auto& n = spec.exponents;

    std::vector<long> gradings(2 * k + 1);
    for (std::size_t i = 0; i <= 2 * k; ++i)
        gradings[i] = (i <= k) ? n[k - i] : -n[i - k];

    const std::vector<long> m = spec.lengths();  // m[j-1] = m_j
    std::vector<Arrow> arrows;
    arrows.reserve(2 * k);
    for (std::size_t j = 0; j < 2 * k; ++j) {
        const long length = (j < k) ? m[k - 1 - j] : m[j - k];
        if (j % 2 == 0)
            arrows.push_back({j, j + 1, length, -1});
        else
            arrows.push_back({j + 1, j, length, +1});
    }

    Staircase s{spec, GradedModule(std::move(gradings)), std::move(arrows)};
    check_invariants(s);
    return s;
}

D1Pair extract_d1(const Staircase& s) {
    const std::size_t n = s.vertices.dim();
    RatMat plus(n, n);
    RatMat minus(n, n);
    for (const Arrow& a : s.arrows) {
        if (a.length != 1) continue;
        (a.sign > 0 ? plus : minus)(a.to, a.from) = 1;
    }
    return {GradedMap::homogeneous(s.vertices, s.vertices, std::move(plus), +1),
            GradedMap::homogeneous(s.vertices, s.vertices, std::move(minus), -1)};
}

ConeReport isharp_dim(const StaircaseSpec& spec, const Rat& c_plus, const Rat& c_minus) {
    if (c_plus == 0 || c_minus == 0)
        fail(Errc::ZeroScalar, "the cone scalars must both be nonzero");
    const Staircase s = build_staircase(spec);
    const D1Pair d1 = extract_d1(s);
    return cone(c_plus * d1.plus + c_minus * d1.minus, Ring::rational);
}

}  // namespace isharp
