#ifndef NEVPICK_RESOLVENT_HPP
#define NEVPICK_RESOLVENT_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nevpick/problem.hpp"
#include "nevpick/rational.hpp"
#include "nevpick/sampling.hpp"

namespace nevpick {

/// 2x2 matrix of rational functions, entries stored row-major.
class RationalMatrix2x2 {
public:
    RationalMatrix2x2() : RationalMatrix2x2(identity()) {}
    RationalMatrix2x2(RationalFunction a11, RationalFunction a12, RationalFunction a21, RationalFunction a22)
        : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {}

    static RationalMatrix2x2 identity() {
        return RationalMatrix2x2(Scalar(1), Scalar(0), Scalar(0), Scalar(1));
    }

    const RationalFunction& operator()(std::size_t i, std::size_t j) const { return e_[2 * i + j]; }
    RationalFunction& operator()(std::size_t i, std::size_t j) { return e_[2 * i + j]; }

    /// Candidate pole locations (the nodes the matrix was built from).
    std::vector<Scalar> poles;
    /// Negative squares of the Pick matrix behind this resolvent.
    std::size_t kappa = 0;

    bool is_exact() const;
    RationalFunction determinant() const;
    /// Entrywise z -> Theta(conj z)^*: transposed, coefficients conjugated.
    RationalMatrix2x2 sharp() const;
    std::array<cplx, 4> eval(cplx z) const;
    /// Exact or float evaluation; nullopt when z is a pole of some entry.
    std::optional<std::array<Scalar, 4>> try_eval(const Scalar& z) const;

    friend RationalMatrix2x2 operator*(const RationalMatrix2x2& a, const RationalMatrix2x2& b);
    friend bool operator==(const RationalMatrix2x2& a, const RationalMatrix2x2& b) { return a.e_ == b.e_; }

    std::string to_string() const;

private:
    std::array<RationalFunction, 4> e_;
};

/// I + sum_k R_k / (z - x_k), combined over prod (z - x_k) and simplified.
RationalMatrix2x2 from_residues(const std::vector<Scalar>& points, const std::vector<std::array<Scalar, 4>>& residues);

/// Theta(z) = I - i [C;E] (zI - X)^{-1} P^{-1} [C* E*] J. Throws SingularPick.
RationalMatrix2x2 build_theta(const PickSystem& sys);

/// I + i [C;E] P^{-1} (zI - X)^{-1} [C* E*] J from the system data.
RationalMatrix2x2 theta_inverse(const PickSystem& sys);
/// Adjugate over determinant. Throws SingularMatrix when det vanishes
/// identically.
RationalMatrix2x2 theta_inverse(const RationalMatrix2x2& theta);

/// Residue of a rational function at a simple pole x (zero if r is regular
/// there). Throws PoleError when the pole at x has higher order.
Scalar simple_residue(const RationalFunction& r, const Scalar& x);

struct JUnitarityReport {
    bool symbolic_checked = false;  // exact matrix: identity tested as rational functions
    bool symbolic_zero = false;
    double max_residual = 0.0;  // over the sample points that were used
    std::vector<double> skipped;  // sample points at or next to a pole
};

/// Checks Theta(z) J Theta#(z) = J symbolically (exact input) and
/// ||Theta(x) J Theta(x)* - J||_max at the real sample points.
JUnitarityReport check_j_unitarity(const RationalMatrix2x2& theta, const std::vector<Scalar>& samples);

struct ThetaKernelReport {
    std::size_t negatives = 0;              // from Theta samples
    std::size_t realization_negatives = 0;  // from the state-space form
    double max_mismatch = 0.0;              // largest entry gap between the two
    std::size_t points = 0;
};

/// Negative squares of (J - Theta(z) J Theta(zeta)*) / (-i (z - conj zeta))
/// over sections of the grid, cross-checked against
/// F(z) P^{-1} F(zeta)* with F(z) = [C;E](zI - X)^{-1}.
ThetaKernelReport kernel_theta_negative_squares(const PickSystem& sys, const RationalMatrix2x2& theta,
                                                const GridConfig& grid = {});

struct Factorization {
    RationalMatrix2x2 first;   // from the leading k nodes
    RationalMatrix2x2 second;  // from the trailing block of P^{-1}
    std::size_t kappa_first = 0;
    std::size_t kappa_second = 0;
};

/// Splits Theta = Theta1 * Theta2 along the first k nodes. Throws
/// SplitNotAdmissible when the leading k x k block of P is singular.
Factorization factorize(const PickSystem& sys, std::size_t k);

}  // namespace nevpick

#endif  // NEVPICK_RESOLVENT_HPP
