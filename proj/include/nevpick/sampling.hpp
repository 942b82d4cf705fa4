#ifndef NEVPICK_SAMPLING_HPP
#define NEVPICK_SAMPLING_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nevpick/matrix.hpp"

namespace nevpick {

using cplx = std::complex<double>;

/// Where kernels are sampled and how sections are chosen. The default grid
/// has 6 points on each of the lines Im z = 0.3 and Im z = 1.1, with real
/// parts evenly spread over [lo - margin, hi + margin].
struct GridConfig {
    std::vector<double> imag_lines{0.3, 1.1};
    std::size_t points_per_line = 6;
    double margin = 1.0;
    /// Used verbatim instead of the line grid when nonempty.
    std::vector<cplx> explicit_points;
    /// Up to this many points every nonempty subset is a section.
    std::size_t exhaustive_limit = 6;
    std::size_t random_sections = 256;
    std::uint64_t seed = 20240611;
    /// Eigenvalues with |lambda| <= eig_tol * max(1, spectral radius) are zero.
    double eig_tol = 1e-9;
};

/// Grid points for data whose real nodes lie in [lo, hi].
std::vector<cplx> make_grid(const GridConfig& cfg, double lo, double hi);

/// A sampled Hermitian kernel matrix: `fixed` leading rows and columns that
/// belong to every section, followed by `points` blocks of size `block`.
struct SampledKernel {
    std::size_t fixed = 0;
    std::size_t block = 1;
    std::size_t points = 0;
    std::vector<cplx> data;  // row-major, order fixed + block * points

    std::size_t order() const noexcept { return fixed + block * points; }
    cplx& at(std::size_t i, std::size_t j) { return data[i * order() + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data[i * order() + j]; }
    void resize(std::size_t f, std::size_t b, std::size_t m) {
        fixed = f;
        block = b;
        points = m;
        data.assign(order() * order(), cplx{});
    }
};

struct SectionResult {
    std::size_t max_negatives = 0;
    std::vector<std::size_t> witness;  // sample indices of a maximizing section
    Inertia full;                      // inertia of the whole sampled matrix
    std::size_t sections = 0;
};

/// Largest negative-eigenvalue count over principal sections. All subsets are
/// used for small grids, the full set plus seeded random subsets otherwise.
SectionResult max_section_negatives(const SampledKernel& k, const GridConfig& cfg);

/// Largest asymmetry |a_ij - conj a_ji| relative to the largest entry.
double hermitian_defect(const SampledKernel& k);

}  // namespace nevpick

#endif  // NEVPICK_SAMPLING_HPP
