#include "eclrc/linalg.hpp"

#include <algorithm>

namespace eclrc {

std::vector<std::size_t> Matrix::rref() {
    const Field& f = *field_;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = row; r < rows_; ++r)
            if ((*this)(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
        const std::uint32_t inv = f.pow((*this)(row, col), -1);
        for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) = f.mul((*this)(row, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            const std::uint32_t factor = (*this)(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                (*this)(r, c) = f.sub((*this)(r, c), f.mul(factor, (*this)(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<std::uint32_t>> Matrix::nullspace() const {
    Matrix red = *this;
    const auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_->neg(red(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint32_t Matrix::determinant() const {
    if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const Field& f = *field_;
    Matrix m = *this;
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = col; r < rows_; ++r)
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel == rows_) return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(col, c));
            det = f.neg(det);
        }
        det = f.mul(det, m(col, col));
        const std::uint32_t inv = f.pow(m(col, col), -1);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            const std::uint32_t factor = f.mul(m(r, col), inv);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
        }
    }
    return det;
}

Matrix Matrix::transposed() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix out(*field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
    Matrix out(*field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < cols.size(); ++i) out(r, i) = (*this)(r, cols[i]);
    return out;
}

std::optional<std::vector<std::uint32_t>> solve(const Matrix& m, const std::vector<std::uint32_t>& b) {
    if (b.size() != m.rows()) fail(ErrorKind::InvalidArgument, "right-hand side has wrong length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<std::uint32_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

}  // namespace eclrc
