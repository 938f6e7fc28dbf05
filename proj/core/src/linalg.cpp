#include "isharp/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace isharp {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

}  // namespace

IntMat mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) fail(Errc::BadParameter, "matrix product shape mismatch");
    IntMat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMat mul(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) fail(Errc::BadParameter, "matrix product shape mismatch");
    RatMat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMat to_rat(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
    return out;
}

bool is_integral(const RatMat& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (denominator(m(r, c)) != 1) return false;
    return true;
}

IntMat to_int(const RatMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (denominator(m(r, c)) != 1)
                fail(Errc::BadParameter, "matrix entry is not an integer");
            out(r, c) = numerator(m(r, c));
        }
    return out;
}

IntMat hcat(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) fail(Errc::BadParameter, "hcat row mismatch");
    IntMat out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

RatMat hcat(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) fail(Errc::BadParameter, "hcat row mismatch");
    RatMat out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

RatMat select(const RatMat& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx) {
    RatMat out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            out(r, c) = m(row_idx[r], col_idx[c]);
    return out;
}

RatMat select_cols(const RatMat& m, const std::vector<std::size_t>& col_idx) {
    std::vector<std::size_t> all_rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) all_rows[r] = r;
    return select(m, all_rows, col_idx);
}

IntMat clear_denominators(const RatMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, denominator(m(r, c)));
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = numerator(m(r, c)) * (scale / denominator(m(r, c)));
    }
    return out;
}

long rank(const IntMat& input) {
    IntMat m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const Int pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = exact_div(m(i, j) * pivot - m(i, c) * m(r, j), prev);
            m(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return static_cast<long>(r);
}

long rank(const RatMat& m) { return rank(clear_denominators(m)); }

long rank_mod2(const IntMat& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<std::uint8_t>> a(rows, std::vector<std::uint8_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<std::uint8_t>(abs(m(r, c)) % 2);
    long rk = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][c] == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[i][j] ^= a[row][j];
        }
        ++row;
        ++rk;
    }
    return rk;
}

Int determinant(IntMat m) {
    if (m.rows() != m.cols()) fail(Errc::BadParameter, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            m.swap_rows(p, k);
            sign = -sign;
        }
        const Int pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * pivot - m(i, k) * m(k, j), prev);
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

RatMat nullspace_basis(const RatMat& input) {
    RatMat m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Reduced row echelon form with recorded pivot columns.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(p, row);
        const Rat inv = Rat(1) / m(row, c);
        for (std::size_t j = c; j < cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m(i, c) == 0) continue;
            const Rat factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMat basis(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) basis(pivot_col[i], k) = -m(i, fc);
    }
    return basis;
}

namespace {

// Elementary row/column operations that keep u * m_original * v equal to the
// working matrix, with u_inv and v_inv maintained alongside.
struct SnfWork {
    IntMat m, u, v, u_inv, v_inv;

    explicit SnfWork(IntMat mat)
        : m(std::move(mat)),
          u(IntMat::identity(m.rows())),
          v(IntMat::identity(m.cols())),
          u_inv(IntMat::identity(m.rows())),
          v_inv(IntMat::identity(m.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        m.swap_cols(a, b);
        v.swap_cols(a, b);
        v_inv.swap_rows(a, b);
    }

    // row[a] += q * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) += q * m(b, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(a, c) += q * u(b, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, b) -= q * u_inv(r, a);
    }

    // col[a] += q * col[b]
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, a) += q * m(r, b);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, a) += q * v(r, b);
        for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(b, c) -= q * v_inv(a, c);
    }

    void negate_row(std::size_t a) {
        for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) = -m(a, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(a, c) = -u(a, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv(r, a) = -u_inv(r, a);
    }
};

}  // namespace

Snf smith_normal_form(IntMat input) {
    SnfWork w(std::move(input));
    const std::size_t rows = w.m.rows();
    const std::size_t cols = w.m.cols();
    const std::size_t steps = std::min(rows, cols);

    // Nearest-integer quotient keeps remainders at most half the pivot.
    auto nearest_quotient = [](const Int& a, const Int& b) {
        Int q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        if (2 * abs(r) > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
        return q;
    };

    for (std::size_t t = 0; t < steps; ++t) {
        // The pivot is re-selected as the smallest nonzero entry of the
        // trailing submatrix before every reduction sweep; together with
        // nearest-integer quotients this at least halves the pivot whenever
        // a division is inexact, which keeps coefficient growth in check.
        auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
            std::size_t bi = rows, bj = cols;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (w.m(i, j) == 0) continue;
                    const Int a = abs(w.m(i, j));
                    if (best == 0 || a < best) {
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };

        if (find_pivot().first == rows) break;

        for (;;) {
            const auto [pi, pj] = find_pivot();
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            const Int pivot = w.m(t, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.m(i, t) == 0) continue;
                w.add_row(i, t, -nearest_quotient(w.m(i, t), pivot));
                if (w.m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.m(t, j) == 0) continue;
                w.add_col(j, t, -nearest_quotient(w.m(t, j), pivot));
                if (w.m(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole trailing block for the
            // divisibility chain; pull any offender into row t and repeat.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (w.m(i, j) % pivot != 0) {
                        w.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }

        if (w.m(t, t) < 0) w.negate_row(t);
    }

    Snf out;
    out.divisors.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) out.divisors[t] = w.m(t, t);
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    out.u_inv = std::move(w.u_inv);
    out.v_inv = std::move(w.v_inv);
    return out;
}

std::vector<Int> nonunit_divisors(const std::vector<Int>& divisors) {
    std::vector<Int> out;
    for (const Int& d : divisors)
        if (d > 1) out.push_back(d);
    return out;
}

IntegerHomology integer_complex_homology(const IntMat& d) {
    if (d.rows() != d.cols()) fail(Errc::BadParameter, "differential must be square");
    if (!mul(d, d).is_zero()) fail(Errc::BadParameter, "differential does not square to zero");
    const std::size_t n = d.rows();

    const Snf s = smith_normal_form(d);
    std::size_t r = 0;
    while (r < s.divisors.size() && s.divisors[r] != 0) ++r;

    // Kernel basis: the last n - r columns of v span ker d as a saturated
    // sublattice. Image generators: d * (col j of v) = divisor_j * (col j of
    // u_inv) for j < r. Image coordinates in the kernel basis are the last
    // n - r rows of v_inv * generator.
    const std::size_t kdim = n - r;
    IntMat coords(kdim, r);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Int> gen(n, 0);
        for (std::size_t i = 0; i < n; ++i) gen[i] = s.divisors[j] * s.u_inv(i, j);
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = 0;
            for (std::size_t kk = 0; kk < n; ++kk) acc += s.v_inv(i, kk) * gen[kk];
            if (i < r) {
                if (acc != 0) throw std::logic_error("image not contained in kernel lattice");
            } else {
                coords(i - r, j) = acc;
            }
        }
    }

    const Snf q = smith_normal_form(coords);
    IntegerHomology h;
    std::size_t qr = 0;
    for (const Int& dv : q.divisors) {
        if (dv == 0) continue;
        ++qr;
        if (dv > 1) h.torsion.push_back(dv);
    }
    h.free_rank = static_cast<long>(kdim - qr);
    return h;
}

}  // namespace isharp
