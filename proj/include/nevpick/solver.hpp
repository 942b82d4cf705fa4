#ifndef NEVPICK_SOLVER_HPP
#define NEVPICK_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nevpick/boundary.hpp"
#include "nevpick/problem.hpp"
#include "nevpick/resolvent.hpp"
#include "nevpick/transform.hpp"

namespace nevpick {

struct SolverConfig {
    double rank_tol = 1e-9;
    LimitConfig limits;
    GridConfig grid;
    /// Band for comparing numerically obtained parameter limits with eta and
    /// the thresholds; values inside it count as equal.
    double decision_tol = 1e-7;
    /// Tolerance for certifying interpolation conditions of a candidate.
    double check_tol = 1e-8;
    /// Tolerance for confirming predicted outcomes: equalities within it,
    /// strict inequalities by more than it.
    double prediction_tol = 1e-6;
};

/// C when e~_i != 0, Ctilde when e~_i = 0.
enum class Family { C, Ctilde };

struct ConditionLabel {
    std::size_t node = 0;
    Family family = Family::C;
    int index = 0;  // 1..6; 0 when the limits were inconclusive
    bool exact = false;  // decided without numerics (constant or infinity)
    double threshold = 0.0;  // -p~_ii / e~_i^2 or -p~_ii / c~_i^2
    double compared = 0.0;   // phi'(x_i) or -1/phi_{-1}(x_i) when defined
    LimitEstimate value;     // phi(x_i)
    LimitEstimate derivative;  // K_phi(x_i, x_i), i.e. phi'(x_i)
    LimitEstimate residual;    // phi_{-1}(x_i)

    bool classified() const noexcept { return index > 0; }
    std::string name() const;
};

enum class Outcome {
    Interpolates,    // w(x_i) = w_i, w'(x_i) = gamma_i  /  w_{-1}(x_i) = xi_i
    BelowBound,      // w(x_i) = w_i, w'(x_i) < gamma_i  /  -1/w_{-1} < -1/xi_i
    AboveBound,      // w(x_i) = w_i, gamma_i < w'(x_i) < inf  /  -1/w_{-1} > -1/xi_i
    PossiblyMissed,  // w(x_i) missing, != w_i, or infinite kernel diagonal
    Missed,          // w(x_i) exists and differs from w_i
    ZeroResidual,    // w_{-1}(x_i) = 0
    Unknown,
};

std::string to_string(Outcome o);
std::string to_string(Family f);

/// Label of phi at node i. Constants and infinity are decided exactly,
/// rational parameters through boundary limits with ties inside
/// decision_tol going to index 5 (or 6 when p~_ii = 0).
ConditionLabel classify_parameter(const PickSystem& sys, const Parameter& phi, std::size_t i, const SolverConfig& cfg = {});

Outcome predict_behavior(const ConditionLabel& label, NodeKind kind);
std::string describe(Outcome o, NodeKind kind);

/// (k, kappa - k) where k counts labels with index 4, 5 or 6. Throws
/// InconsistentClassification when k > kappa.
std::pair<std::size_t, std::size_t> lost_squares(const std::vector<ConditionLabel>& labels, std::size_t kappa);

struct ClassificationReport {
    std::vector<ConditionLabel> labels;
    std::vector<Outcome> predicted;
    std::size_t k = 0;
    std::size_t class_index = 0;
    bool all_classified = true;
    bool problem1 = false;  // every index <= 2
    bool problem2 = false;  // every index <= 3
};

ClassificationReport classify_all(const PickSystem& sys, const Parameter& phi, const SolverConfig& cfg = {});

enum class MissSetVerdict { Infeasible, UniqueParameter, InfinitelyMany };
std::string to_string(MissSetVerdict v);

/// Verdict from the principal submatrix of P^{-1} on the node subset.
MissSetVerdict feasibility_miss_set(const PickSystem& sys, const std::vector<std::size_t>& subset);

/// True iff every diagonal entry of P^{-1} is positive.
bool equivalence_check(const PickSystem& sys);

/// w(z) = x*(zI - X)^{-1} C* / x*(zI - X)^{-1} E* for a kernel vector x of P.
RationalFunction degenerate_solution(const PickSystem& sys, const std::vector<Scalar>& kernel_vector);
/// Runs degenerate_solution on every null-space basis vector and checks the
/// results agree. Throws NoSolutionRepresentation or InvariantViolation.
RationalFunction solve_degenerate(const PickSystem& sys);

struct NodeCheck {
    std::size_t node = 0;
    NodeKind kind = NodeKind::Regular;
    LimitEstimate value;       // w(x_i) (regular)
    LimitEstimate derivative;  // w'(x_i) (regular)
    LimitEstimate residual;    // w_{-1}(x_i) (singular)
    double value_error = 0.0;
    double second_error = 0.0;  // derivative or residual error
    bool problem1 = false;      // equality conditions hold
    bool problem2 = false;      // inequality conditions hold
};

struct VerificationReport {
    std::vector<NodeCheck> nodes;
    std::size_t kappa = 0;
    std::size_t fmi_count = 0;
    std::size_t kernel_negatives = 0;
    bool problem1 = false;
    bool problem2 = false;
    bool fmi_matches = false;
};

/// Boundary limits of w at every node, the sampled FMI count and the sampled
/// negative squares of K_w.
VerificationReport verify_candidate(const PickSystem& sys, const RationalFunction& w, const SolverConfig& cfg = {});

struct PredictionCheck {
    bool verified = false;
    double margin = 0.0;  // error for equalities, distance into the region for inequalities
    std::string detail;
};

/// Whether w = T_Theta[phi] behaves at node i as the outcome predicts.
PredictionCheck check_prediction(const PickSystem& sys, std::size_t i, Outcome predicted, const RationalFunction& w,
                                 const SolverConfig& cfg = {});

struct SolutionBundle {
    PickSystem system;
    std::optional<RationalMatrix2x2> theta;  // invertible P
    std::optional<RationalFunction> w;       // singular P
    std::size_t kappa = 0;
    int problem = 3;
    std::optional<VerificationReport> verification;
};

SolutionBundle solve(const InterpolationData& data, const SolverConfig& cfg = {});

/// The parameters 0, 1, -2, infinity, z, -1/z, z + 2.
std::vector<Parameter> standard_sweep();

}  // namespace nevpick

#endif  // NEVPICK_SOLVER_HPP
