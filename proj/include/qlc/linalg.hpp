#pragma once

// Small dense real linear algebra used by every other module. Dimensions in
// this project are tens, not thousands, so everything is row-major
// std::vector storage with straightforward loops.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qlc {

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm_squared(std::span<const double> v);
double norm(std::span<const double> v);
Vector scaled(std::span<const double> v, double factor);
Vector subtract(std::span<const double> a, std::span<const double> b);

// General dense rows x cols matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    Vector column(std::size_t j) const;
    Matrix transposed() const;

    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(std::span<const double> v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(double s) const;

    double max_abs() const noexcept;
    double frobenius() const noexcept;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

// n x n real symmetric operator. Construction symmetrizes the input as
// (M + M^T)/2 and rejects non-finite entries, so a SymMatrix is always exactly
// symmetric.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n);
    explicit SymMatrix(const Matrix& m);
    SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(std::span<const double> values);
    static SymMatrix outer(std::span<const double> v);
    static SymMatrix from_row_major(std::size_t n, std::span<const double> values);

    std::size_t dim() const noexcept { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const noexcept { return m_; }

    double trace() const noexcept;
    double max_abs() const noexcept { return m_.max_abs(); }
    double frobenius() const noexcept { return m_.frobenius(); }

    // <Mx, x>
    double quadratic_form(std::span<const double> x) const;

    SymMatrix operator+(const SymMatrix& rhs) const;
    SymMatrix operator-(const SymMatrix& rhs) const;
    SymMatrix operator*(double s) const;
    Matrix operator*(const SymMatrix& rhs) const { return m_ * rhs.m_; }
    Vector operator*(std::span<const double> v) const { return m_ * v; }

private:
    Matrix m_;
};

SymMatrix operator*(double s, const SymMatrix& m);

// tr(A B) without forming the product.
double trace_of_product(const SymMatrix& a, const SymMatrix& b);

}  // namespace qlc
