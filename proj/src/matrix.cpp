#include "lrc/matrix.hpp"

#include <algorithm>
#include <string>

namespace lrc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            fail(ErrorCode::InvalidArgument, "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                                 " entries, expected " + std::to_string(cols));
        }
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(i).begin());
    return out;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) fail(ErrorCode::LengthMismatch, "appended row has wrong length");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) fail(ErrorCode::LengthMismatch, "cannot stack matrices of different widths");
    Matrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::fits(const Field& f) const noexcept {
    return std::all_of(data_.begin(), data_.end(), [&](Elem e) { return f.contains(e); });
}

Echelon rref(const Matrix& m, const Field& f) {
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead) {
            auto x = a.row(pivot);
            auto y = a.row(lead);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        const Elem scale = f.inv(a(lead, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), scale);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c) == 0) continue;
            const Elem factor = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
        }
        e.pivots.push_back(c);
        ++lead;
    }
    return e;
}

std::size_t rank(const Matrix& m, const Field& f) {
    // Forward elimination only; cheaper than full rref on hot paths.
    Matrix a = m;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead) {
            auto x = a.row(pivot);
            auto y = a.row(lead);
            std::swap_ranges(x.begin(), x.end(), y.begin());
        }
        const Elem scale = f.inv(a(lead, c));
        for (std::size_t r = lead + 1; r < a.rows(); ++r) {
            if (a(r, c) == 0) continue;
            const Elem factor = f.mul(a(r, c), scale);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
        }
        ++lead;
    }
    return lead;
}

Matrix null_space_basis(const Matrix& m, const Field& f) {
    const auto e = rref(m, f);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix basis(0, m.cols());
    Vector v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.append_row(v);
    }
    return basis;
}

std::optional<Vector> solve_linear(const Matrix& a, std::span<const Elem> b, const Field& f) {
    if (b.size() != a.rows()) fail(ErrorCode::LengthMismatch, "right-hand side length differs from row count");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
        aug(r, a.cols()) = b[r];
    }
    const auto e = rref(aug, f);
    Vector x(a.cols(), 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
    if (a.cols() != b.rows()) fail(ErrorCode::LengthMismatch, "matrix dimensions do not agree");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    return out;
}

Vector vec_mat(std::span<const Elem> v, const Matrix& m, const Field& f) {
    if (v.size() != m.rows()) fail(ErrorCode::LengthMismatch, "vector length differs from row count");
    Vector out(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
    }
    return out;
}

Vector mat_vec(const Matrix& m, std::span<const Elem> v, const Field& f) {
    if (v.size() != m.cols()) fail(ErrorCode::LengthMismatch, "vector length differs from column count");
    Vector out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = f.add(out[i], f.mul(m(i, j), v[j]));
    return out;
}

Matrix row_basis(const Matrix& m, const Field& f) {
    auto e = rref(m, f);
    std::vector<std::size_t> keep(e.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    Matrix out = e.reduced.select_rows(keep);
    if (out.rows() == 0) out = Matrix(0, m.cols());
    return out;
}

bool same_row_space(const Matrix& a, const Matrix& b, const Field& f) {
    if (a.cols() != b.cols()) return false;
    return row_basis(a, f) == row_basis(b, f);
}

std::size_t hamming_weight(std::span<const Elem> v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

}  // namespace lrc
