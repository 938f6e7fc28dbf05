#pragma once

#include "isharp/errors.hpp"
#include "isharp/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace isharp {

// Dense row-major matrix over an exact scalar. All operations on distinct
// values are safe to run concurrently; nothing here mutates shared state.
template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Mat&) const = default;

    bool is_zero() const {
        for (const T& x : data_)
            if (x != 0) return false;
        return true;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

IntMat mul(const IntMat& a, const IntMat& b);
RatMat mul(const RatMat& a, const RatMat& b);

RatMat to_rat(const IntMat& m);
bool is_integral(const RatMat& m);
IntMat to_int(const RatMat& m);  // BadParameter unless is_integral

// [a | b] side by side; row counts must agree.
IntMat hcat(const IntMat& a, const IntMat& b);
RatMat hcat(const RatMat& a, const RatMat& b);

// Picks rows/cols by index, in the given order.
RatMat select(const RatMat& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx);
RatMat select_cols(const RatMat& m, const std::vector<std::size_t>& col_idx);

// Row-wise denominator clearing; preserves rank.
IntMat clear_denominators(const RatMat& m);

// Exact rank via fraction-free (Bareiss) elimination. Rational input is
// scaled row-wise to integers first; no fraction ever appears mid-pivot.
long rank(const IntMat& m);
long rank(const RatMat& m);

// Rank of the mod-2 reduction.
long rank_mod2(const IntMat& m);

// Determinant of a square matrix by fraction-free elimination.
Int determinant(IntMat m);

// Columns form a basis of { x : m x = 0 }; the result is n x nullity.
RatMat nullspace_basis(const RatMat& m);

/**
 * Smith normal form: u * m * v = diag(divisors) with unimodular u, v
 * (det = +-1). Divisors are non-negative and form a divisibility chain
 * d1 | d2 | ... with zeros trailing; the list has length min(rows, cols).
 * The inverses of u and v are tracked alongside, which makes exact lattice
 * computations (kernel coordinates, quotients) direct.
 */
struct Snf {
    std::vector<Int> divisors;
    IntMat u, v;
    IntMat u_inv, v_inv;
};
Snf smith_normal_form(IntMat m);

// Nonunit divisors d > 1, i.e. the torsion of the cokernel.
std::vector<Int> nonunit_divisors(const std::vector<Int>& divisors);

/**
 * Homology of a square integer differential d with d*d = 0, as an abstract
 * Z-module: ker d / im d = Z^free_rank + sum of Z/t over t in torsion.
 * Computed by expressing the image inside a saturated kernel basis and
 * taking elementary divisors of the inclusion.
 */
struct IntegerHomology {
    long free_rank = 0;
    std::vector<Int> torsion;
};
IntegerHomology integer_complex_homology(const IntMat& d);

}  // namespace isharp
