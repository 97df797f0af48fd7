#include "grsobs/intmatrix.hpp"

#include "grsobs/error.hpp"

#include <algorithm>
#include <utility>

namespace grsobs::intlat {

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_)
            throw Error("validate", "ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw Error("validate", "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntVector IntMatrix::diagonal() const {
    IntVector d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix n(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) n.data_[i] = -data_[i];
    return n;
}

IntMatrix IntMatrix::removing(std::size_t row, std::size_t col) const {
    IntMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error("validate", "matrix product dimension mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size())
        throw Error("validate", "matrix-vector dimension mismatch");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).str();
        }
        s += "]";
    }
    s += "]";
    return s;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw Error("validate", "dot product dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw Error("validate", "determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.is_square())
        throw Error("validate", "adjugate requires a square matrix");
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = determinant(m.removing(j, i));
            adj.at(i, j) = ((i + j) % 2 == 0) ? c : Int(-c);
        }
    return adj;
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    if (!m.is_square())
        throw Error("validate", "principal minors require a square matrix");
    const std::size_t n = m.rows();
    std::vector<Int> minors(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix lead(k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) lead.at(i, j) = m.at(i, j);
        minors[k] = determinant(lead);
    }
    return minors;
}

bool is_negative_definite(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw Error("validate", "definiteness test requires a symmetric matrix");
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix lead(k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) lead.at(i, j) = m.at(i, j);
        Int minor = determinant(lead);
        bool want_negative = (k % 2 == 0);
        if (minor == 0) return false;
        if (want_negative != (minor < 0)) return false;
    }
    return true;
}

}  // namespace grsobs::intlat
