#pragma once

#include <vector>

#include "polyadic/gf.hpp"

namespace polyadic {

/// Row-major dense matrix over a field context.
struct Matrix {
    FieldCtxPtr ctx;
    size_t rows = 0, cols = 0;
    std::vector<FieldElement> data;

    Matrix() = default;
    Matrix(FieldCtxPtr c, size_t r, size_t n);
    static Matrix from_rows(const FieldCtxPtr& ctx, const std::vector<std::vector<FieldElement>>& rows);

    FieldElement& at(size_t i, size_t j) { return data[i * cols + j]; }
    const FieldElement& at(size_t i, size_t j) const { return data[i * cols + j]; }
    std::vector<FieldElement> row(size_t i) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
};

/// Canonical reduced row echelon form with zero rows dropped; equal row
/// spaces produce identical matrices.
Matrix rref(const Matrix& m);
size_t rank(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Basis of {x : m x^T = 0} as rows ((cols - rank) x cols).
Matrix nullspace(const Matrix& m);
bool row_space_equal(const Matrix& a, const Matrix& b);

}  // namespace polyadic
