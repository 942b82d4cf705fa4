#include "dense_numeric.hpp"

#include <Eigen/Dense>

namespace nevpick::detail {

namespace {

Eigen::MatrixXcd to_eigen(const std::vector<cplx>& a, std::size_t n) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i * n + j];
    return m;
}

}  // namespace

std::vector<cplx> companion_roots(const std::vector<cplx>& coeffs) {
    if (coeffs.size() <= 1) return {};
    const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const cplx lead = coeffs.back();
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cplx> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a, std::size_t n) {
    if (n == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a, n), Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    return out;
}

void hermitian_eigensystem(const std::vector<cplx>& a, std::size_t n, std::vector<double>& values,
                           std::vector<cplx>& vectors) {
    values.assign(n, 0.0);
    vectors.assign(n * n, cplx{});
    if (n == 0) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a, n));
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        for (std::size_t j = 0; j < n; ++j)
            vectors[j * n + i] = solver.eigenvectors()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
    }
}

}  // namespace nevpick::detail
