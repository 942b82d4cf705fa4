#ifndef NEVPICK_CLI_HPP
#define NEVPICK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nevpick/json_io.hpp"

namespace nevpick {

/// {P, X, E, C, kappa, derived, lyapunov_residual, ...}
json cmd_pick(const InterpolationData& data, const RunConfig& cfg = {});
/// Theta for invertible P, the unique w (with its verification) otherwise.
json cmd_solve(const InterpolationData& data, const RunConfig& cfg = {});
/// w = T_Theta[phi] with the per-node classification and its verification.
/// Throws InvalidParameter (with a witness in the message) when phi fails
/// the sampled Nevanlinna test.
json cmd_apply(const InterpolationData& data, const Parameter& phi, const RunConfig& cfg = {});
/// Boundary limits of w at the nodes, the FMI count and sq_- of K_w.
json cmd_verify(const InterpolationData& data, const RationalFunction& w, const RunConfig& cfg = {});

/// Entry point of the nevpick executable; args excludes the program name.
/// Returns 0, 2 for input errors, 3 for validation errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nevpick

#endif  // NEVPICK_CLI_HPP
