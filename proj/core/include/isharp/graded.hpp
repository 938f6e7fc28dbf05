#pragma once

#include "isharp/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace isharp {

// Finite-dimensional vector space with a fixed ordered basis and one integer
// (Alexander) grading per basis vector. The order is the matrix basis.
class GradedModule {
  public:
    GradedModule() = default;
    explicit GradedModule(std::vector<long> gradings) : gradings_(std::move(gradings)) {}

    std::size_t dim() const { return gradings_.size(); }
    long grading(std::size_t i) const { return gradings_.at(i); }
    const std::vector<long>& gradings() const { return gradings_; }

    // grading -> dimension, nonzero entries only.
    std::map<long, long> graded_dims() const;
    std::vector<std::size_t> indices_at(long grading) const;

    bool operator==(const GradedModule&) const = default;

  private:
    std::vector<long> gradings_;
};

/**
 * Linear map between graded modules with exact rational entries
 * (codomain rows x domain columns).
 *
 * A declared shift of s promises grading(codomain row) = grading(domain
 * column) + s for every nonzero entry; the promise is checked at
 * construction and a violating matrix is rejected. declared_shift() is
 * empty for mixed maps such as d1+ + d1-, which carry no single shift.
 */
class GradedMap {
  public:
    static GradedMap homogeneous(GradedModule domain, GradedModule codomain, RatMat matrix,
                                 long shift);
    static GradedMap mixed(GradedModule domain, GradedModule codomain, RatMat matrix);
    static GradedMap zero(GradedModule domain, GradedModule codomain,
                          std::optional<long> shift = std::nullopt);

    const GradedModule& domain() const { return domain_; }
    const GradedModule& codomain() const { return codomain_; }
    const RatMat& matrix() const { return matrix_; }
    std::optional<long> declared_shift() const { return shift_; }
    bool is_endomorphism() const { return domain_ == codomain_; }

    // Model of the mirror knot: swaps domain and codomain, negates the shift.
    GradedMap transposed() const;

    // Sum keeps a declared shift only when both operands declare the same
    // one; anything else is mixed. Scaling keeps the shift.
    friend GradedMap operator+(const GradedMap& a, const GradedMap& b);
    friend GradedMap operator*(const Rat& c, const GradedMap& f);

  private:
    GradedMap(GradedModule d, GradedModule c, RatMat m, std::optional<long> s);

    GradedModule domain_, codomain_;
    RatMat matrix_;
    std::optional<long> shift_;
};

// g after f; CompositionMismatch unless codomain(f) = domain(g).
GradedMap compose(const GradedMap& g, const GradedMap& f);

long rank(const GradedMap& f);

}  // namespace isharp
