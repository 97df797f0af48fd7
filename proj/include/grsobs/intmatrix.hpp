#pragma once

#include "grsobs/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace grsobs::intlat {

using grsobs::Int;
using grsobs::Rational;
using IntVector = std::vector<Int>;

// Dense integer matrix with arbitrary-precision entries. Everything in this
// module is exact; there is no overflow anywhere in the pipeline.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    // Convenience builder, mostly for tests and fixtures.
    static IntMatrix of(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector diagonal() const;
    IntMatrix transposed() const;
    IntMatrix negated() const;
    IntMatrix removing(std::size_t row, std::size_t col) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& rhs) const = default;

    std::string to_string() const;  // "[[a,b],[c,d]]"

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

Int dot(const IntVector& a, const IntVector& b);

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// The 0x0 determinant is 1.
Int determinant(const IntMatrix& m);

// Exact adjugate: m * adjugate(m) == determinant(m) * I, also for singular m.
// The 1x1 adjugate is [[1]].
IntMatrix adjugate(const IntMatrix& m);

// minors[k] = determinant of the leading (k+1)x(k+1) submatrix.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

// Sylvester test: every leading principal k x k minor has sign (-1)^k,
// strictly. The 0x0 matrix is vacuously negative definite.
bool is_negative_definite(const IntMatrix& m);

}  // namespace grsobs::intlat
