#pragma once

#include <cstddef>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Fe& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Fe operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void push_row(const std::vector<Fe>& row);

    static Matrix identity(std::size_t n);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Fe> a_;
};

/// In-place reduced row echelon form; pivot = first nonzero entry scanning columns left to right.
/// Returns pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& m);
std::size_t rank(const Field& F, Matrix m);
Fe det(const Field& F, Matrix m);
/// Kernel basis, itself in reduced row echelon form (one vector per row).
std::vector<std::vector<Fe>> nullspace(const Field& F, Matrix m);

}  // namespace cremona
