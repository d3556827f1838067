#include "qlc/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qlc/error.hpp"

namespace qlc {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size(), "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_squared(std::span<const double> v) { return dot(v, v); }

double norm(std::span<const double> v) { return std::sqrt(norm_squared(v)); }

Vector scaled(std::span<const double> v, double factor) {
    Vector out(v.begin(), v.end());
    for (double& x : out) x *= factor;
    return out;
}

Vector subtract(std::span<const double> a, std::span<const double> b) {
    require_same_size(a.size(), b.size(), "subtract");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// --- Matrix ----------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_size(cols_, rhs.rows_, "matrix product");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

Vector Matrix::operator*(std::span<const double> v) const {
    require_same_size(cols_, v.size(), "matrix-vector product");
    Vector out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_size(rows_, rhs.rows_, "matrix sum");
    require_same_size(cols_, rhs.cols_, "matrix sum");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_size(rows_, rhs.rows_, "matrix difference");
    require_same_size(cols_, rhs.cols_, "matrix difference");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
    return out;
}

Matrix Matrix::operator*(double s) const {
    Matrix out = *this;
    for (double& x : out.data_) x *= s;
    return out;
}

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

double Matrix::frobenius() const noexcept {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

// --- SymMatrix -------------------------------------------------------------

SymMatrix::SymMatrix(std::size_t n) : m_(n, n) {}

SymMatrix::SymMatrix(const Matrix& m) : m_(m.rows(), m.cols()) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "symmetric matrix must be square");
    }
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(m(i, j))) {
                throw Error(ErrorKind::InvalidMatrix, "non-finite matrix entry");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        m_(i, i) = m(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m_(i, j) = v;
            m_(j, i) = v;
        }
    }
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(Matrix(rows)) {}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return SymMatrix(m);
}

SymMatrix SymMatrix::outer(std::span<const double> v) {
    Matrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
    return SymMatrix(m);
}

SymMatrix SymMatrix::from_row_major(std::size_t n, std::span<const double> values) {
    if (values.size() != n * n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(n * n) + " entries, got " +
                        std::to_string(values.size()));
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = values[i * n + j];
    return SymMatrix(m);
}

double SymMatrix::trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
    return t;
}

double SymMatrix::quadratic_form(std::span<const double> x) const {
    require_same_size(dim(), x.size(), "quadratic form");
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim(); ++j) row += m_(i, j) * x[j];
        s += x[i] * row;
    }
    return s;
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const { return SymMatrix(m_ + rhs.m_); }

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const { return SymMatrix(m_ - rhs.m_); }

SymMatrix SymMatrix::operator*(double s) const { return SymMatrix(m_ * s); }

SymMatrix operator*(double s, const SymMatrix& m) { return m * s; }

double trace_of_product(const SymMatrix& a, const SymMatrix& b) {
    require_same_size(a.dim(), b.dim(), "trace of product");
    // tr(AB) = sum_ij A_ij B_ji, and B is symmetric.
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * b(i, j);
    return s;
}

}  // namespace qlc
