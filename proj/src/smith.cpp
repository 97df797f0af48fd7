#include "grsobs/smith.hpp"

#include "grsobs/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace grsobs::intlat {

namespace {

struct Working {
    IntMatrix a, u, v;

    void row_axpy(std::size_t dst, std::size_t src, const Int& q) {
        // row dst -= q * row src, in A and U
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(dst, j) -= q * a.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) -= q * u.at(src, j);
    }
    void col_axpy(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, dst) -= q * a.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) -= q * v.at(i, src);
    }
    void swap_rows(std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        u.swap_rows(x, y);
    }
    void swap_cols(std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        v.swap_cols(x, y);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Working w{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        // Smallest nonzero pivot by absolute value (ties: lowest row, column).
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                Int v = abs(w.a.at(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // remaining block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear column t.
            for (std::size_t i = t + 1; i < rows; ++i) {
                while (w.a.at(i, t) != 0) {
                    Int q = w.a.at(i, t) / w.a.at(t, t);
                    w.row_axpy(i, t, q);
                    if (w.a.at(i, t) != 0) {
                        w.swap_rows(t, i);
                        dirty = true;
                    }
                }
            }
            // Clear row t.
            for (std::size_t j = t + 1; j < cols; ++j) {
                while (w.a.at(t, j) != 0) {
                    Int q = w.a.at(t, j) / w.a.at(t, t);
                    w.col_axpy(j, t, q);
                    if (w.a.at(t, j) != 0) {
                        w.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
        }

        // Pivot must divide the rest of the block; if not, fold the offending
        // row in and redo the reduction of this step.
        for (std::size_t i = t + 1; i < rows && w.a.at(t, t) != 0; ++i) {
            bool fold = false;
            for (std::size_t j = t + 1; j < cols; ++j)
                if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                    fold = true;
                    break;
                }
            if (fold) {
                w.row_axpy(t, i, Int(-1));  // row t += row i
                --t;                        // redo this step
                break;
            }
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (w.a.at(t, t) < 0) w.negate_row(t);

    // The pivot-divides sweep above leaves the diagonal in divisibility
    // order; assert rather than trust.
    for (std::size_t t = 0; t + 1 < steps; ++t) {
        const Int& a = w.a.at(t, t);
        const Int& b = w.a.at(t + 1, t + 1);
        if (a == 0 && b != 0)
            throw Error("compute", "smith normal form: zero before nonzero on diagonal");
        if (a != 0 && b % a != 0)
            throw Error("compute", "smith normal form: divisibility chain broken");
    }

    return SmithDecomposition{std::move(w.u), std::move(w.a), std::move(w.v)};
}

CokernelMap::CokernelMap(AbelianGroupStructure group, IntMatrix u, std::vector<Int> diag)
    : group_(std::move(group)), u_(std::move(u)), diag_(std::move(diag)) {
    Int det_u = determinant(u_);
    IntMatrix adj = adjugate(u_);
    u_inverse_ = (det_u == 1) ? adj : adj.negated();
    for (std::size_t i = 0; i < diag_.size(); ++i)
        if (diag_[i] > 1) nontrivial_.push_back(i);
}

std::vector<Int> CokernelMap::label(const IntVector& x) const {
    IntVector coords = u_ * x;
    std::vector<Int> out;
    out.reserve(nontrivial_.size());
    for (std::size_t i : nontrivial_) out.push_back(mod_positive(coords[i], diag_[i]));
    return out;
}

IntVector CokernelMap::lift(const std::vector<Int>& label) const {
    if (label.size() != nontrivial_.size())
        throw Error("validate", "label length does not match the group");
    IntVector full(diag_.size(), Int(0));
    for (std::size_t k = 0; k < nontrivial_.size(); ++k) full[nontrivial_[k]] = label[k];
    return u_inverse_ * full;
}

CokernelMap cokernel(const IntMatrix& m) {
    if (!m.is_square())
        throw Error("validate", "cokernel requires a square matrix");
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Int> diag(m.rows());
    AbelianGroupStructure g;
    g.order = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        diag[i] = snf.d.at(i, i);
        if (diag[i] == 0)
            throw Error("validate", "cokernel requires a nonsingular matrix");
        g.order *= diag[i];
        if (diag[i] > 1) g.invariant_factors.push_back(diag[i]);
    }
    g.cyclic = g.invariant_factors.size() <= 1;
    return CokernelMap(std::move(g), std::move(snf.u), std::move(diag));
}

std::vector<int> solve_mod2(const IntMatrix& m, const IntVector& b) {
    if (!m.is_square())
        throw Error("validate", "solve_mod2 requires a square matrix");
    if (m.rows() != b.size())
        throw Error("validate", "solve_mod2 dimension mismatch");
    const std::size_t n = m.rows();
    // Augmented system over GF(2).
    std::vector<std::vector<int>> a(n, std::vector<int>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<int>(mod_positive(m.at(i, j), 2));
        a[i][n] = static_cast<int>(mod_positive(b[i], 2));
    }
    std::vector<std::size_t> pivot_col(n);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t p = rank;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != rank && a[i][col])
                for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[rank][j];
        pivot_col[rank++] = col;
    }
    if (rank < n)
        throw Error("validate", "matrix is singular mod 2");
    std::vector<int> x(n, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][n];
    return x;
}

}  // namespace grsobs::intlat
