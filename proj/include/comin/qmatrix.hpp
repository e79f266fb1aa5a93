#pragma once

#include "comin/rational.hpp"

#include <cstddef>
#include <initializer_list>

namespace comin {

// Dense matrix over the rationals.  Rank goes through fraction-free
// (Bareiss) elimination on an integer scaling of the matrix, so every
// intermediate value is exact.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const = default;

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix pow(unsigned k) const;   // square matrices only
    bool is_zero() const;

    // Fraction-free rank on the integer matrix obtained by clearing
    // denominators row by row.
    std::size_t rank() const;

    // Exact inverse; throws ConsistencyError on a singular input.
    QMatrix inverse() const;

    // Columns forming a basis of the column space.
    QMatrix column_space() const;

    // Columns forming a basis of the nullspace.
    QMatrix null_space() const;

    // [this | other] side by side; row counts must agree.
    QMatrix augment_cols(const QMatrix& other) const;
    // [this ; other] stacked; column counts must agree.
    QMatrix stack_rows(const QMatrix& other) const;

    // Rows with indices in [lo, hi).
    QMatrix row_slice(std::size_t lo, std::size_t hi) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

namespace subspace {

// Subspaces of Q^n are passed around as matrices whose columns span them.

QMatrix sum(const QMatrix& a, const QMatrix& b);
QMatrix intersection(const QMatrix& a, const QMatrix& b);
std::size_t dim(const QMatrix& span);

// Intersection with the coordinate block [lo, hi): vectors of the span
// whose coordinates outside the block vanish.
QMatrix coordinate_block_intersection(const QMatrix& span, std::size_t lo, std::size_t hi);

} // namespace subspace

} // namespace comin
