#include "isharp/graded.hpp"

#include <string>

namespace isharp {

std::map<long, long> GradedModule::graded_dims() const {
    std::map<long, long> out;
    for (long g : gradings_) ++out[g];
    return out;
}

std::vector<std::size_t> GradedModule::indices_at(long grading) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gradings_.size(); ++i)
        if (gradings_[i] == grading) out.push_back(i);
    return out;
}

GradedMap::GradedMap(GradedModule d, GradedModule c, RatMat m, std::optional<long> s)
    : domain_(std::move(d)), codomain_(std::move(c)), matrix_(std::move(m)), shift_(s) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
        fail(Errc::BadParameter, "matrix shape does not match the modules: expected " +
                                     std::to_string(codomain_.dim()) + "x" +
                                     std::to_string(domain_.dim()));
}

GradedMap GradedMap::homogeneous(GradedModule domain, GradedModule codomain, RatMat matrix,
                                 long shift) {
    GradedMap f(std::move(domain), std::move(codomain), std::move(matrix), shift);
    for (std::size_t r = 0; r < f.matrix_.rows(); ++r)
        for (std::size_t c = 0; c < f.matrix_.cols(); ++c) {
            if (f.matrix_(r, c) == 0) continue;
            const long got = f.codomain_.grading(r) - f.domain_.grading(c);
            if (got != shift)
                fail(Errc::ShiftMismatch,
                     "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") changes the grading by " + std::to_string(got) +
                         ", declared shift is " + std::to_string(shift));
        }
    return f;
}

GradedMap GradedMap::mixed(GradedModule domain, GradedModule codomain, RatMat matrix) {
    return GradedMap(std::move(domain), std::move(codomain), std::move(matrix), std::nullopt);
}

GradedMap GradedMap::zero(GradedModule domain, GradedModule codomain, std::optional<long> shift) {
    RatMat m(codomain.dim(), domain.dim());
    return GradedMap(std::move(domain), std::move(codomain), std::move(m), shift);
}

GradedMap GradedMap::transposed() const {
    std::optional<long> s;
    if (shift_) s = -*shift_;
    return GradedMap(codomain_, domain_, matrix_.transposed(), s);
}

GradedMap operator+(const GradedMap& a, const GradedMap& b) {
    if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_)
        fail(Errc::BadParameter, "sum of maps between different modules");
    RatMat m = a.matrix_;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) += b.matrix_(r, c);
    std::optional<long> s;
    if (a.shift_ && b.shift_ && *a.shift_ == *b.shift_) s = a.shift_;
    return GradedMap(a.domain_, a.codomain_, std::move(m), s);
}

GradedMap operator*(const Rat& c, const GradedMap& f) {
    RatMat m = f.matrix_;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= c;
    return GradedMap(f.domain_, f.codomain_, std::move(m), f.shift_);
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.codomain() != g.domain())
        fail(Errc::CompositionMismatch, "codomain of the first map is not the domain of the second");
    std::optional<long> s;
    if (f.declared_shift() && g.declared_shift()) s = *f.declared_shift() + *g.declared_shift();
    RatMat m = mul(g.matrix(), f.matrix());
    if (s) return GradedMap::homogeneous(f.domain(), g.codomain(), std::move(m), *s);
    return GradedMap::mixed(f.domain(), g.codomain(), std::move(m));
}

long rank(const GradedMap& f) { return rank(f.matrix()); }

}  // namespace isharp
