#ifndef NEVPICK_BOUNDARY_HPP
#define NEVPICK_BOUNDARY_HPP

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "nevpick/problem.hpp"
#include "nevpick/rational.hpp"
#include "nevpick/sampling.hpp"

namespace nevpick {

class Parameter;

enum class LimitKind { Value, Derivative, Residual, KernelDiagonal };
enum class LimitStatus { Finite, Infinite, DoesNotExist };

std::string to_string(LimitKind k);
std::string to_string(LimitStatus s);

struct LimitConfig {
    double t0 = 0.5;        // first step length
    int max_steps = 40;     // steps k = 0..max_steps, step t0 * 2^-k
    double limit_tol = 1e-9;
    double stop_tol = 1e-13;
    /// Growth test for Infinite: |g| rises monotonically by this factor over
    /// growth_window steps, checked only once k >= growth_from.
    double growth_factor = 10.0;
    int growth_window = 5;
    int growth_from = 10;
};

struct LimitEstimate {
    LimitKind kind = LimitKind::Value;
    LimitStatus status = LimitStatus::DoesNotExist;
    cplx value{};
    std::vector<cplx> approximants;  // Richardson extrapolants in path order
    bool converged = false;          // stopped on the strict tolerance
    double error = 0.0;              // last accepted successive difference

    bool finite() const noexcept { return status == LimitStatus::Finite; }
    double real() const noexcept { return value.real(); }
    std::string to_string() const;
};

/// Second-order Richardson extrapolation of g(h) as h = t0 2^-k -> 0.
LimitEstimate extrapolate_limit(const std::function<cplx(double)>& g, const LimitConfig& cfg = {});

/// Limit of the chosen quantity along z = x0 + i t0 2^-k:
///   Value f(z); Derivative f'(z); Residual (z - x0) f(z);
///   KernelDiagonal Im f(z) / Im z.
LimitEstimate nt_limit(const RationalFunction& f, double x0, LimitKind kind, const LimitConfig& cfg = {});
/// Same along the tilted approach z = x0 + (1 + i) t, still nontangential.
LimitEstimate nt_limit_tilted(const RationalFunction& f, double x0, LimitKind kind, const LimitConfig& cfg = {});

enum class CJRoute { Bounded, Unbounded, Inconclusive };

/// Four limits of the boundary derivative theorem at x0.
/// Bounded route: d (kernel diagonal along a tilted path, standing in for
/// the liminf, which is recorded as implied rather than certified),
/// d~ (kernel diagonal, vertical path), lim f'(z), lim (f(z) - f(x0))/(z - x0).
/// Unbounded route, with g = -1/f: -1/d, -1/d~ for the kernel of g,
/// lim (z - x0) f(z) and lim -(z - x0)^2 f'(z); all four equal w_{-1}.
struct CJReport {
    CJRoute route = CJRoute::Inconclusive;
    LimitEstimate boundary_value;
    std::array<LimitEstimate, 4> limits;
    std::array<std::string, 4> labels;
    double discrepancy = 0.0;
    bool all_finite = false;
    bool liminf_implied = true;
};

CJReport caratheodory_julia_check(const RationalFunction& f, double x0, const LimitConfig& cfg = {});

/// Sampled sections of (f(z_i) - conj f(z_j)) / (z_i - conj z_j) on the grid
/// built over [lo, hi]; grid points next to poles are skipped.
SectionResult kernel_negative_squares(const RationalFunction& f, double lo, double hi, const GridConfig& grid = {});

/// The bordered kernel with P as fixed leading block and one row/column per
/// grid point: column j is (z_j I - X)^{-1} (w(z_j) E* - C*), bottom-right
/// entries K_w(z_j, z_i). A solution must show exactly kappa negatives.
SectionResult fmi_check(const PickSystem& sys, const RationalFunction& w, const GridConfig& grid = {});

/// S(zeta) = (w(z) - i) / (w(z) + i) with z = i (1 + zeta) / (1 - zeta).
/// Throws InvalidFunction for w = -i.
RationalFunction cayley_transform(const RationalFunction& w);
/// Infinity maps to S = 1.
RationalFunction cayley_transform(const Parameter& phi);

/// Largest |K_S(zeta1, zeta2) - phi(z1) K_w(z1, z2) conj phi(z2)| with
/// phi(z) = (z + i) / (w(z) + i) over seeded random pairs in the disk.
double cayley_kernel_defect(const RationalFunction& w, const RationalFunction& S, std::size_t pairs = 20,
                            std::uint64_t seed = 7);

struct BlaschkeValue {
    double closed_form = 0.0;  // sum (1 - |c|^2) / |1 - t0 conj c|^2
    LimitEstimate extrapolated;
    double discrepancy = 0.0;
};

/// Boundary value of (1 - |b(z)|^2) / (1 - |z|^2) for the Blaschke product
/// with the given zeros at the unimodular point t0, approached along the
/// radius. Throws InvalidData for zeros outside the open disk or |t0| != 1.
BlaschkeValue blaschke_boundary_value(const std::vector<cplx>& zeros, cplx t0, const LimitConfig& cfg = {});

}  // namespace nevpick

#endif  // NEVPICK_BOUNDARY_HPP
