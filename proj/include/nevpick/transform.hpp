#ifndef NEVPICK_TRANSFORM_HPP
#define NEVPICK_TRANSFORM_HPP

#include <string>
#include <vector>

#include "nevpick/rational.hpp"
#include "nevpick/resolvent.hpp"
#include "nevpick/sampling.hpp"

namespace nevpick {

/// A parameter of the extended Nevanlinna class: a real constant, the point
/// at infinity, or a rational function with real coefficients.
class Parameter {
public:
    enum class Kind { Constant, Infinity, Rational };

    /// Throws InvalidParameter for a non-real constant.
    static Parameter constant(Scalar c);
    static Parameter infinity() { return Parameter(Kind::Infinity, Scalar(0), RationalFunction()); }
    /// Throws InvalidParameter for complex coefficients.
    static Parameter rational(RationalFunction f);

    Kind kind() const noexcept { return kind_; }
    bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
    const Scalar& value() const noexcept { return value_; }
    const RationalFunction& function() const noexcept { return fn_; }

    /// Homogeneous pair (p, q) with phi = p / q; infinity is (1, 0).
    std::pair<RationalFunction, RationalFunction> homogeneous() const;
    std::string to_string() const;

private:
    Parameter(Kind k, Scalar v, RationalFunction f) : kind_(k), value_(std::move(v)), fn_(std::move(f)) {}

    Kind kind_;
    Scalar value_;
    RationalFunction fn_;
};

/// Sampling points used to test parameters: Re z in {-3, ..., 3} on the
/// lines Im z in {1, 0.25, 4}.
GridConfig parameter_grid();

struct NevanlinnaCheck {
    bool ok = true;
    std::vector<cplx> witness;   // points of an offending section
    double worst_diagonal = 0.0; // smallest Im phi(z) / Im z seen
};

/// Samples the kernel (phi(z_j) - conj phi(z_i)) / (z_j - conj z_i). Constants
/// and infinity pass. Fails when a section has an eigenvalue below the
/// -1e-10 slack; grid points at poles are skipped.
NevanlinnaCheck is_nevanlinna(const Parameter& phi, const GridConfig& grid = parameter_grid());

/// (T11 phi + T12) / (T21 phi + T22) with phi = p/q substituted as
/// (T11 p + T12 q) / (T21 p + T22 q). Throws DegenerateTransform when the
/// denominator vanishes identically.
RationalFunction apply_lft(const RationalMatrix2x2& theta, const Parameter& phi);

/// apply_lft as a parameter: infinity when the denominator vanishes.
Parameter lft_parameter(const RationalMatrix2x2& theta, const Parameter& phi);

inline RationalMatrix2x2 lft_compose(const RationalMatrix2x2& a, const RationalMatrix2x2& b) { return a * b; }

}  // namespace nevpick

#endif  // NEVPICK_TRANSFORM_HPP
