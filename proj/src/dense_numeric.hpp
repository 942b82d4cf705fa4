#ifndef NEVPICK_SRC_DENSE_NUMERIC_HPP
#define NEVPICK_SRC_DENSE_NUMERIC_HPP

// Float linear-algebra kernels backed by Eigen. Kept out of the public headers
// so only one translation unit pays for the Eigen include.

#include <complex>
#include <cstddef>
#include <vector>

namespace nevpick::detail {

using cplx = std::complex<double>;

/// Roots of sum c[k] z^k via companion-matrix eigenvalues. Trailing zero
/// coefficients must already be trimmed.
std::vector<cplx> companion_roots(const std::vector<cplx>& coeffs);

/// Eigenvalues (ascending) of an n x n Hermitian matrix stored row-major.
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a, std::size_t n);

/// Eigen-decomposition of a Hermitian matrix; vectors are column k of the
/// row-major n x n output.
void hermitian_eigensystem(const std::vector<cplx>& a, std::size_t n, std::vector<double>& values,
                           std::vector<cplx>& vectors);

}  // namespace nevpick::detail

#endif  // NEVPICK_SRC_DENSE_NUMERIC_HPP
