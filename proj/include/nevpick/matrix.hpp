#ifndef NEVPICK_MATRIX_HPP
#define NEVPICK_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "nevpick/scalar.hpp"

namespace nevpick {

/// Small dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar(0));

    static Matrix identity(std::size_t n, Backend b = Backend::Exact);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix diagonal(const std::vector<Scalar>& d);
    static Matrix row(const std::vector<Scalar>& v);
    static Matrix column(const std::vector<Scalar>& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_exact() const;
    Matrix to_backend(Backend b) const;
    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Submatrix picking the listed rows and columns in order.
    Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    double max_abs() const;
    std::vector<std::complex<double>> to_complex() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Square matrix checked to equal its adjoint: exactly on the exact backend,
/// within 1e-12 relative to the largest entry otherwise.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Matrix m);
    const Matrix& matrix() const noexcept { return m_; }
    std::size_t order() const noexcept { return m_.rows(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    Matrix m_;
};

struct Inertia {
    std::size_t negatives = 0;
    std::size_t zeros = 0;
    std::size_t positives = 0;

    std::size_t order() const noexcept { return negatives + zeros + positives; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sign counts of the eigenvalues. Exact matrices go through symmetric
/// elimination with 1x1/2x2 pivots (Sylvester's law), no tolerance. Float
/// matrices count |lambda| <= rank_tol * max(1, spectral radius) as zero.
Inertia hermitian_inertia(const HermitianMatrix& m, double rank_tol = 1e-9);

/// Inertia of a float Hermitian matrix given row-major; eigenvalues with
/// |lambda| <= tol * max(1, spectral radius) are zeros.
Inertia sampled_inertia(const std::vector<std::complex<double>>& a, std::size_t n, double tol);

/// Gauss-Jordan inverse. Throws SingularMatrix on an exact zero pivot column or
/// when the float reciprocal condition number falls below 1e-14.
Matrix matrix_inverse(const Matrix& m);

/// Basis of the right null space. Exact: reduced row echelon form, one vector
/// per free column. Float: eigenvectors of M*M for eigenvalues below
/// rank_tol * max(1, spectral radius).
std::vector<std::vector<Scalar>> null_space(const Matrix& m, double rank_tol = 1e-9);

}  // namespace nevpick

#endif  // NEVPICK_MATRIX_HPP
