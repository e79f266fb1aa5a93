#include "comin/qmatrix.hpp"

#include "comin/errors.hpp"

namespace comin {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw ConsistencyError("QMatrix multiply: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::pow(unsigned k) const {
    if (rows_ != cols_) throw ConsistencyError("QMatrix::pow: square matrices only");
    QMatrix acc = identity(rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool QMatrix::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

namespace {

// Integer matrix with the same rank: each row scaled by the lcm of its
// denominators.
std::vector<std::vector<Int>> clear_denominators(const QMatrix& m) {
    std::vector<std::vector<Int>> z(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int d = m.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            z[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return z;
}

} // namespace

std::size_t QMatrix::rank() const {
    auto m = clear_denominators(*this);
    const std::size_t nr = rows_, nc = cols_;
    std::size_t rank = 0;
    Int prev_pivot = 1;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[rank], m[piv]);
        // Bareiss step: exact division by the previous pivot.
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                Int t = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev_pivot = m[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

// Reduced row echelon form over Q; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(piv, j));
        Rat inv = m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw ConsistencyError("QMatrix::inverse: not square");
    QMatrix aug = augment_cols(identity(rows_));
    auto pivots = rref(aug);
    if (pivots.size() != rows_) throw ConsistencyError("QMatrix::inverse: singular matrix");
    QMatrix inv(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

QMatrix QMatrix::column_space() const {
    QMatrix work = *this;
    auto pivots = rref(work);
    QMatrix basis(rows_, pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) basis.at(i, k) = at(i, pivots[k]);
    return basis;
}

QMatrix QMatrix::null_space() const {
    QMatrix work = *this;
    auto pivots = rref(work);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], k) = -work.at(r, fc);
    }
    return basis;
}

QMatrix QMatrix::augment_cols(const QMatrix& other) const {
    if (rows_ != other.rows_) throw ConsistencyError("augment_cols: row mismatch");
    QMatrix r(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, cols_ + j) = other.at(i, j);
    }
    return r;
}

QMatrix QMatrix::stack_rows(const QMatrix& other) const {
    if (cols_ != other.cols_) throw ConsistencyError("stack_rows: column mismatch");
    QMatrix r(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = other.at(i, j);
    return r;
}

QMatrix QMatrix::row_slice(std::size_t lo, std::size_t hi) const {
    QMatrix r(hi - lo, cols_);
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i - lo, j) = at(i, j);
    return r;
}

namespace subspace {

QMatrix sum(const QMatrix& a, const QMatrix& b) { return a.augment_cols(b).column_space(); }

QMatrix intersection(const QMatrix& a, const QMatrix& b) {
    // Solve a·x = b·y: nullspace of [a | -b]; the a·x part spans the intersection.
    if (a.cols() == 0 || b.cols() == 0) return QMatrix(a.rows(), 0);
    QMatrix neg_b(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) neg_b.at(i, j) = -b.at(i, j);
    QMatrix ns = a.augment_cols(neg_b).null_space();
    QMatrix x_part(a.cols(), ns.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < ns.cols(); ++j) x_part.at(i, j) = ns.at(i, j);
    return (a * x_part).column_space();
}

std::size_t dim(const QMatrix& span) { return span.rank(); }

QMatrix coordinate_block_intersection(const QMatrix& span, std::size_t lo, std::size_t hi) {
    if (span.cols() == 0) return span;
    // Combinations of the spanning columns killed by the outside rows.
    QMatrix outside(span.rows() - (hi - lo), span.cols());
    std::size_t r = 0;
    for (std::size_t i = 0; i < span.rows(); ++i) {
        if (i >= lo && i < hi) continue;
        for (std::size_t j = 0; j < span.cols(); ++j) outside.at(r, j) = span.at(i, j);
        ++r;
    }
    QMatrix ns = outside.null_space();
    return (span * ns).column_space();
}

} // namespace subspace

} // namespace comin
