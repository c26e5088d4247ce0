#ifndef ECLRC_LINALG_HPP
#define ECLRC_LINALG_HPP

// Exact dense linear algebra over a Field. Entries are raw element indices.
// Row reduction always pivots on the first column that still has a nonzero
// entry and takes the lowest-numbered row holding one, so reduced forms and
// nullspace bases are reproducible.

#include <cstdint>
#include <optional>
#include <vector>

#include "eclrc/gf.hpp"

namespace eclrc {

class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot columns in order.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of {v : M v = 0}, one vector per free column (1 in that slot).
    std::vector<std::vector<std::uint32_t>> nullspace() const;
    std::uint32_t determinant() const;
    Matrix transposed() const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    Matrix select_cols(const std::vector<std::size_t>& cols) const;

private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// Some x with M x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<std::vector<std::uint32_t>> solve(const Matrix& m, const std::vector<std::uint32_t>& b);

}  // namespace eclrc

#endif
