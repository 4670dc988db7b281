#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

using Vector = std::vector<Elem>;
/// Ordered set of coordinate indices (0-based).
using Coords = std::vector<std::size_t>;

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n);
    /// Throws InvalidArgument on ragged input. `cols` is used when rows is empty.
    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    std::vector<std::vector<Elem>> to_rows() const;
    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;
    void append_row(std::span<const Elem> values);
    /// Stacks `below` under this matrix; column counts must agree.
    Matrix stacked(const Matrix& below) const;

    bool is_zero() const noexcept;
    bool fits(const Field& f) const noexcept;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. The pivot for each column is the first
/// remaining row with a nonzero entry; zero rows are kept at the bottom.
Echelon rref(const Matrix& m, const Field& f);

std::size_t rank(const Matrix& m, const Field& f);

/// Rows form a basis of {x : m * x^T = 0}, one row per non-pivot column of
/// rref(m) in ascending column order.
Matrix null_space_basis(const Matrix& m, const Field& f);

/// Some x with a * x^T = b^T, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve_linear(const Matrix& a, std::span<const Elem> b, const Field& f);

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
/// v * m (row vector times matrix).
Vector vec_mat(std::span<const Elem> v, const Matrix& m, const Field& f);
/// m * v^T.
Vector mat_vec(const Matrix& m, std::span<const Elem> v, const Field& f);

/// Rows of rref(m) that are nonzero; spans the same row space.
Matrix row_basis(const Matrix& m, const Field& f);

/// True when both matrices span the same row space.
bool same_row_space(const Matrix& a, const Matrix& b, const Field& f);

std::size_t hamming_weight(std::span<const Elem> v) noexcept;

}  // namespace lrc
