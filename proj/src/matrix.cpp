#include "nevpick/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dense_numeric.hpp"
#include "nevpick/errors.hpp"

namespace nevpick {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n, Backend b) {
    const Scalar one = b == Backend::Exact ? Scalar(1) : Scalar::from_double(1.0);
    const Scalar zero = b == Backend::Exact ? Scalar(0) : Scalar::from_double(0.0);
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InvariantViolation("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::row(const std::vector<Scalar>& v) {
    Matrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool Matrix::is_exact() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Matrix Matrix::to_backend(Backend b) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x.to_backend(b);
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvariantViolation("block out of range");
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, x.abs());
    return m;
}

std::vector<std::complex<double>> Matrix::to_complex() const {
    std::vector<std::complex<double>> v;
    v.reserve(data_.size());
    for (const auto& x : data_) v.push_back(x.to_complex());
    return v;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvariantViolation("shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvariantViolation("shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& x : data_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvariantViolation("shape mismatch in *");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw InvariantViolation("Hermitian matrix must be square");
    const double scale = std::max(1.0, m_.max_abs());
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i; j < m_.cols(); ++j) {
            const Scalar& a = m_(i, j);
            const Scalar b = m_(j, i).conj();
            const bool ok = (a.is_exact() && b.is_exact()) ? a == b : std::abs(a.to_complex() - b.to_complex()) <= 1e-12 * scale;
            if (!ok) throw InvariantViolation("matrix is not Hermitian at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

namespace {

void count_sign(Inertia& in, int sign) {
    if (sign < 0)
        ++in.negatives;
    else if (sign > 0)
        ++in.positives;
    else
        ++in.zeros;
}

// Symmetric elimination over the exact field. At each step a nonzero
// diagonal pivot is taken if one exists; otherwise a nonzero off-diagonal
// a_ij gives the 2x2 pivot [[0, a], [conj a, 0]] with one eigenvalue of each
// sign. Congruence preserves inertia throughout.
Inertia exact_inertia(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

    Inertia in;
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;

    while (!live.empty()) {
        auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return !a[i][i].is_zero(); });
        if (diag != live.end()) {
            const std::size_t p = *diag;
            const Scalar d = a[p][p];
            count_sign(in, d.compare_real(Scalar(0)));
            live.erase(diag);
            for (std::size_t i : live) {
                if (a[i][p].is_zero()) continue;
                const Scalar f = a[i][p] / d;
                for (std::size_t j : live) a[i][j] -= f * a[p][j];
            }
            continue;
        }
        std::size_t p = n, q = n;
        for (std::size_t i : live) {
            for (std::size_t j : live)
                if (i != j && !a[i][j].is_zero()) {
                    p = i;
                    q = j;
                    break;
                }
            if (p != n) break;
        }
        if (p == n) {
            in.zeros += live.size();
            break;
        }
        ++in.negatives;
        ++in.positives;
        std::erase(live, p);
        std::erase(live, q);
        // D = [[0, b], [conj b, 0]], D^{-1} = [[0, 1/conj b], [1/b, 0]]
        const Scalar b = a[p][q];
        const Scalar inv_b = Scalar(1) / b;
        const Scalar inv_bc = Scalar(1) / b.conj();
        std::vector<std::vector<Scalar>> upd(live.size(), std::vector<Scalar>(live.size()));
        for (std::size_t r = 0; r < live.size(); ++r) {
            const std::size_t i = live[r];
            // row i of B D^{-1}
            const Scalar u = a[i][q] * inv_b;
            const Scalar v = a[i][p] * inv_bc;
            for (std::size_t c = 0; c < live.size(); ++c) {
                const std::size_t j = live[c];
                upd[r][c] = u * a[p][j] + v * a[q][j];
            }
        }
        for (std::size_t r = 0; r < live.size(); ++r)
            for (std::size_t c = 0; c < live.size(); ++c) a[live[r]][live[c]] -= upd[r][c];
    }
    return in;
}

}  // namespace

Inertia sampled_inertia(const std::vector<std::complex<double>>& a, std::size_t n, double tol) {
    Inertia in;
    if (n == 0) return in;
    const auto ev = detail::hermitian_eigenvalues(a, n);
    double rho = 0.0;
    for (double v : ev) rho = std::max(rho, std::abs(v));
    const double cut = tol * std::max(1.0, rho);
    for (double v : ev) {
        if (std::abs(v) <= cut)
            ++in.zeros;
        else if (v < 0)
            ++in.negatives;
        else
            ++in.positives;
    }
    return in;
}

Inertia hermitian_inertia(const HermitianMatrix& m, double rank_tol) {
    if (m.matrix().is_exact()) return exact_inertia(m.matrix());
    return sampled_inertia(m.matrix().to_complex(), m.order(), rank_tol);
}

namespace {

double one_norm(const Matrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, j).abs();
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

Matrix matrix_inverse(const Matrix& m) {
    if (!m.is_square()) throw InvariantViolation("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const bool exact = m.is_exact();
    Matrix a = m;
    Matrix inv = Matrix::identity(n, exact ? Backend::Exact : Backend::Float);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        if (exact) {
            for (std::size_t r = col; r < n; ++r)
                if (!a(r, col).is_zero()) {
                    piv = r;
                    break;
                }
        } else {
            double best = 0.0;
            for (std::size_t r = col; r < n; ++r)
                if (a(r, col).abs() > best) {
                    best = a(r, col).abs();
                    piv = r;
                }
        }
        if (piv == n) throw SingularMatrix("matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const Scalar d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Scalar f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    if (!exact) {
        const double rcond = 1.0 / (one_norm(m) * one_norm(inv));
        if (!(rcond >= 1e-14)) throw SingularMatrix("matrix is numerically singular (rcond " + std::to_string(rcond) + ")");
    }
    return inv;
}

std::vector<std::vector<Scalar>> null_space(const Matrix& m, double rank_tol) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Scalar>> basis;
    if (m.is_exact()) {
        Matrix a = m;
        std::vector<std::size_t> pivot_cols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (!a(i, c).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == rows) continue;
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
            const Scalar d = a(r, c);
            for (std::size_t j = 0; j < cols; ++j) a(r, j) /= d;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || a(i, c).is_zero()) continue;
                const Scalar f = a(i, c);
                for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
            }
            pivot_cols.push_back(c);
            ++r;
        }
        for (std::size_t free = 0; free < cols; ++free) {
            if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
            std::vector<Scalar> v(cols, Scalar(0));
            v[free] = Scalar(1);
            for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const Matrix g = m.adjoint() * m;
    std::vector<double> values;
    std::vector<std::complex<double>> vectors;
    detail::hermitian_eigensystem(g.to_complex(), cols, values, vectors);
    double rho = 0.0;
    for (double v : values) rho = std::max(rho, std::abs(v));
    const double cut = rank_tol * std::max(1.0, rho);
    for (std::size_t k = 0; k < cols; ++k) {
        if (std::abs(values[k]) > cut) continue;
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < cols; ++i) v.emplace_back(vectors[i * cols + k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace nevpick
