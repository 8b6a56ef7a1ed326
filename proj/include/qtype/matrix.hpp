#pragma once

#include "qtype/gaussian.hpp"
#include "qtype/poly.hpp"

#include <string>
#include <vector>

namespace qtype {

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<GaussianRational> entries);

    static Matrix identity(int n);
    // Columns given as vectors of equal length.
    static Matrix from_columns(const std::vector<std::vector<GaussianRational>>& cols);
    static Matrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    GaussianRational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const GaussianRational& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }

    std::vector<GaussianRational> row(int r) const;
    std::vector<GaussianRational> column(int c) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    int rank() const;
    GaussianRational determinant() const;
    // Throws Error(singular_matrix) when not invertible.
    Matrix inverse() const;
    // Basis of {x : A x = 0}, one vector per free column.
    std::vector<std::vector<GaussianRational>> kernel() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussianRational> data_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Matrix& m);

// p composed with z -> A z. A must be square, invertible, of size nvars.
PolyC linear_substitute(const PolyC& p, const Matrix& a);

}  // namespace qtype
