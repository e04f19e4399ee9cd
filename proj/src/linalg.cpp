#include "polyadic/linalg.hpp"

#include "polyadic/errors.hpp"

namespace polyadic {

Matrix::Matrix(FieldCtxPtr c, size_t r, size_t n) : ctx(std::move(c)), rows(r), cols(n) {
    data.assign(rows * cols, ctx->zero());
}

Matrix Matrix::from_rows(const FieldCtxPtr& ctx, const std::vector<std::vector<FieldElement>>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(ctx, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail("BadParams", "ragged rows");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<FieldElement> Matrix::row(size_t i) const {
    return std::vector<FieldElement>(data.begin() + i * cols, data.begin() + (i + 1) * cols);
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ctx == b.ctx && a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

Matrix rref(const Matrix& m) {
    Matrix w = m;
    size_t pivot_row = 0;
    for (size_t col = 0; col < w.cols && pivot_row < w.rows; ++col) {
        size_t sel = pivot_row;
        while (sel < w.rows && w.at(sel, col).is_zero()) ++sel;
        if (sel == w.rows) continue;
        for (size_t j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(pivot_row, j));
        FieldElement inv = w.at(pivot_row, col).inv();
        for (size_t j = col; j < w.cols; ++j) w.at(pivot_row, j) = w.at(pivot_row, j) * inv;
        for (size_t i = 0; i < w.rows; ++i) {
            if (i == pivot_row || w.at(i, col).is_zero()) continue;
            FieldElement f = w.at(i, col);
            for (size_t j = col; j < w.cols; ++j) w.at(i, j) = w.at(i, j) - f * w.at(pivot_row, j);
        }
        ++pivot_row;
    }
    Matrix out(w.ctx, pivot_row, w.cols);
    for (size_t i = 0; i < pivot_row; ++i)
        for (size_t j = 0; j < w.cols; ++j) out.at(i, j) = w.at(i, j);
    return out;
}

size_t rank(const Matrix& m) { return rref(m).rows; }

Matrix transpose(const Matrix& m) {
    Matrix out(m.ctx, m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.ctx != b.ctx) fail("FieldMismatch", "matrices over different fields");
    if (a.cols != b.rows) fail("BadParams", "matrix dimension mismatch");
    Matrix out(a.ctx, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols; ++j) out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return out;
}

Matrix nullspace(const Matrix& m) {
    Matrix r = rref(m);
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t i = 0; i < r.rows; ++i) {
        size_t col = 0;
        while (col < r.cols && r.at(i, col).is_zero()) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = true;
    }
    Matrix out(m.ctx, m.cols - r.rows, m.cols);
    size_t row = 0;
    for (size_t freec = 0; freec < m.cols; ++freec) {
        if (is_pivot[freec]) continue;
        out.at(row, freec) = m.ctx->one();
        for (size_t i = 0; i < r.rows; ++i) out.at(row, pivot_col[i]) = -r.at(i, freec);
        ++row;
    }
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (a.ctx != b.ctx || a.cols != b.cols) return false;
    return rref(a) == rref(b);
}

}  // namespace polyadic
