#include "qtype/matrix.hpp"

#include "qtype/errors.hpp"

#include <sstream>

namespace qtype {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols))
{
    if (rows < 0 || cols < 0)
        throw Error(ErrorCode::invalid_argument, "negative matrix dimension");
}

Matrix::Matrix(int rows, int cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (static_cast<int>(data_.size()) != rows * cols)
        throw Error(ErrorCode::arity_mismatch, "matrix entry count does not match shape");
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<GaussianRational>>& cols)
{
    if (cols.empty())
        return {};
    int r = static_cast<int>(cols.front().size());
    Matrix m(r, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        const auto& col = cols[static_cast<std::size_t>(c)];
        if (static_cast<int>(col.size()) != r)
            throw Error(ErrorCode::arity_mismatch, "columns of different lengths");
        for (int i = 0; i < r; ++i)
            m(i, c) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows)
{
    return from_columns(rows).transpose();
}

std::vector<GaussianRational> Matrix::row(int r) const
{
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<GaussianRational> Matrix::column(int c) const
{
    std::vector<GaussianRational> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        out.push_back((*this)(i, c));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw Error(ErrorCode::arity_mismatch, "matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const auto& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                out(i, j) += a * o(k, j);
        }
    return out;
}

std::vector<GaussianRational> Matrix::apply(const std::vector<GaussianRational>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw Error(ErrorCode::arity_mismatch, "vector length does not match matrix");
    std::vector<GaussianRational> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

std::vector<int> row_reduce(Matrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        GaussianRational inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            GaussianRational f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const
{
    Matrix copy = *this;
    return static_cast<int>(row_reduce(copy).size());
}

GaussianRational Matrix::determinant() const
{
    if (rows_ != cols_)
        throw Error(ErrorCode::arity_mismatch, "determinant of a non-square matrix");
    Matrix m = *this;
    GaussianRational det(1);
    for (int c = 0; c < cols_; ++c) {
        int p = c;
        while (p < rows_ && m(p, c).is_zero())
            ++p;
        if (p == rows_)
            return GaussianRational();
        if (p != c) {
            for (int j = 0; j < cols_; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        GaussianRational inv = m(c, c).inverse();
        for (int i = c + 1; i < rows_; ++i) {
            if (m(i, c).is_zero())
                continue;
            GaussianRational f = m(i, c) * inv;
            for (int j = c; j < cols_; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const
{
    if (rows_ != cols_)
        throw Error(ErrorCode::singular_matrix, "inverse of a non-square matrix");
    int n = rows_;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, n + i) = GaussianRational(1);
    }
    auto pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw Error(ErrorCode::singular_matrix, "matrix is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<std::vector<GaussianRational>> Matrix::kernel() const
{
    Matrix m = *this;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        std::vector<GaussianRational> v(static_cast<std::size_t>(cols_));
        v[static_cast<std::size_t>(free)] = GaussianRational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

PolyC linear_substitute(const PolyC& p, const Matrix& a)
{
    const int n = p.nvars();
    if (a.rows() != n || a.cols() != n)
        throw Error(ErrorCode::arity_mismatch, "substitution matrix does not match variable count");
    if (a.determinant().is_zero())
        throw Error(ErrorCode::singular_matrix, "linear substitution by a singular matrix");
    std::vector<PolyC> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images.push_back(PolyC::linear_form(a.row(i)));
    return substitute(p, images);
}

}  // namespace qtype
