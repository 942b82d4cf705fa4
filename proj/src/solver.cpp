#include "nevpick/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "nevpick/errors.hpp"

namespace nevpick {

std::string to_string(Family f) { return f == Family::C ? "C" : "Ctilde"; }

std::string ConditionLabel::name() const {
    if (!classified()) return "unclassifiable";
    return to_string(family) + std::to_string(index);
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Interpolates:
            return "interpolates";
        case Outcome::BelowBound:
            return "below_bound";
        case Outcome::AboveBound:
            return "above_bound";
        case Outcome::PossiblyMissed:
            return "possibly_missed";
        case Outcome::Missed:
            return "missed";
        case Outcome::ZeroResidual:
            return "zero_residual";
        case Outcome::Unknown:
            break;
    }
    return "unknown";
}

std::string describe(Outcome o, NodeKind kind) {
    const bool reg = kind == NodeKind::Regular;
    switch (o) {
        case Outcome::Interpolates:
            return reg ? "w(x_i) = w_i and w'(x_i) = gamma_i" : "w_{-1}(x_i) = xi_i";
        case Outcome::BelowBound:
            return reg ? "w(x_i) = w_i and -inf < w'(x_i) < gamma_i" : "-inf < -1/w_{-1}(x_i) < -1/xi_i";
        case Outcome::AboveBound:
            return reg ? "w(x_i) = w_i and gamma_i < w'(x_i) < inf" : "-1/xi_i < -1/w_{-1}(x_i) < inf";
        case Outcome::PossiblyMissed:
            return "w(x_i) does not exist, or w(x_i) != w_i, or w(x_i) = w_i with K_w(x_i,x_i) infinite";
        case Outcome::Missed:
            return "w(x_i) exists and w(x_i) != w_i";
        case Outcome::ZeroResidual:
            return "w_{-1}(x_i) = 0";
        case Outcome::Unknown:
            break;
    }
    return "no prediction";
}

std::string to_string(MissSetVerdict v) {
    switch (v) {
        case MissSetVerdict::Infeasible:
            return "infeasible";
        case MissSetVerdict::UniqueParameter:
            return "unique_parameter";
        case MissSetVerdict::InfinitelyMany:
            break;
    }
    return "infinitely_many";
}

namespace {

// Index 3..6 from the compared quantity v (phi' or -1/phi_{-1}) against the
// threshold, exactly.
int decide_exact(const Scalar& v, const Scalar& thr) {
    const int c = v.compare_real(thr);
    if (c > 0) return 3;
    if (c == 0) return thr.is_zero() ? 6 : (thr.compare_real(Scalar(0)) > 0 ? 5 : 0);
    return v.compare_real(Scalar(0)) >= 0 ? 4 : 0;
}

int decide_numeric(double v, double thr, bool p_zero, double tol) {
    if (std::abs(v - thr) <= tol) return p_zero ? 6 : 5;
    if (v > thr) return 3;
    return v >= -tol ? 4 : 0;
}

bool scalar_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact() && b.is_exact()) return a == b;
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

LimitEstimate exact_estimate(LimitKind kind, LimitStatus status, cplx value = {}) {
    LimitEstimate e;
    e.kind = kind;
    e.status = status;
    e.value = value;
    e.converged = true;
    return e;
}

}  // namespace

ConditionLabel classify_parameter(const PickSystem& sys, const Parameter& phi, std::size_t i, const SolverConfig& cfg) {
    const auto& d = sys.require_derived();
    if (i >= sys.size()) throw InvariantViolation("node index out of range");
    ConditionLabel label;
    label.node = i;
    label.family = d.eta[i].infinite ? Family::Ctilde : Family::C;
    const Scalar& p = d.p_tilde_diag[i];
    const Scalar& denom = label.family == Family::C ? d.e_tilde[i] : d.c_tilde[i];
    const Scalar thr = -p / (denom * denom);
    label.threshold = thr.to_complex().real();
    const bool p_zero = p.is_exact() ? p.is_zero() : p.abs() <= 1e-12;
    const double x = sys.nodes[i].x.to_complex().real();

    switch (phi.kind()) {
        case Parameter::Kind::Constant: {
            label.exact = true;
            label.value = exact_estimate(LimitKind::Value, LimitStatus::Finite, phi.value().to_complex());
            label.derivative = exact_estimate(LimitKind::KernelDiagonal, LimitStatus::Finite, 0.0);
            label.residual = exact_estimate(LimitKind::Residual, LimitStatus::Finite, 0.0);
            if (label.family == Family::Ctilde || !scalar_equal(phi.value(), d.eta[i].value, cfg.decision_tol)) {
                label.index = 1;
                return label;
            }
            label.compared = 0.0;
            label.index = decide_exact(Scalar(0), thr);
            return label;
        }
        case Parameter::Kind::Infinity: {
            label.exact = true;
            label.value = exact_estimate(LimitKind::Value, LimitStatus::Infinite);
            label.derivative = exact_estimate(LimitKind::KernelDiagonal, LimitStatus::Infinite);
            label.residual = exact_estimate(LimitKind::Residual, LimitStatus::Infinite);
            if (label.family == Family::C) {
                label.index = 1;
                return label;
            }
            // 1/phi_{-1} = 0 for the constant infinity
            label.compared = 0.0;
            label.index = decide_exact(Scalar(0), thr);
            return label;
        }
        case Parameter::Kind::Rational:
            break;
    }

    const RationalFunction& f = phi.function();
    label.value = nt_limit(f, x, LimitKind::Value, cfg.limits);
    const double tol = cfg.decision_tol;
    if (label.family == Family::C) {
        if (label.value.status != LimitStatus::Finite) {
            label.index = 1;
            return label;
        }
        const double eta = d.eta[i].value.to_complex().real();
        if (std::abs(label.value.value - cplx(eta, 0.0)) > tol) {
            label.index = 1;
            return label;
        }
        label.derivative = nt_limit(f, x, LimitKind::KernelDiagonal, cfg.limits);
        if (label.derivative.status == LimitStatus::Infinite) {
            label.index = 2;
            return label;
        }
        if (!label.derivative.finite()) return label;
        label.compared = label.derivative.real();
        label.index = decide_numeric(label.compared, label.threshold, p_zero, tol);
        return label;
    }
    if (label.value.status != LimitStatus::Infinite) {
        label.index = 1;
        return label;
    }
    label.residual = nt_limit(f, x, LimitKind::Residual, cfg.limits);
    if (!label.residual.finite()) return label;
    const double r = label.residual.real();
    if (std::abs(r) <= tol) {
        label.index = 2;
        return label;
    }
    label.compared = -1.0 / r;
    label.index = decide_numeric(label.compared, label.threshold, p_zero, tol);
    return label;
}

Outcome predict_behavior(const ConditionLabel& label, NodeKind kind) {
    const bool reg = kind == NodeKind::Regular;
    switch (label.index) {
        case 1:
        case 2:
            return Outcome::Interpolates;
        case 3:
            return Outcome::BelowBound;
        case 4:
            return Outcome::AboveBound;
        case 5:
            return reg ? Outcome::PossiblyMissed : Outcome::ZeroResidual;
        case 6:
            return reg ? Outcome::Missed : Outcome::ZeroResidual;
        default:
            return Outcome::Unknown;
    }
}

std::pair<std::size_t, std::size_t> lost_squares(const std::vector<ConditionLabel>& labels, std::size_t kappa) {
    std::size_t k = 0;
    for (const auto& l : labels)
        if (l.index >= 4) ++k;
    if (k > kappa)
        throw InconsistentClassification("parameter meets conditions 4-6 at " + std::to_string(k) + " nodes but kappa = " +
                                         std::to_string(kappa));
    return {k, kappa - k};
}

ClassificationReport classify_all(const PickSystem& sys, const Parameter& phi, const SolverConfig& cfg) {
    ClassificationReport rep;
    rep.problem1 = rep.problem2 = true;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        rep.labels.push_back(classify_parameter(sys, phi, i, cfg));
        const auto& l = rep.labels.back();
        rep.predicted.push_back(predict_behavior(l, sys.nodes[i].kind));
        rep.all_classified = rep.all_classified && l.classified();
        rep.problem1 = rep.problem1 && l.classified() && l.index <= 2;
        rep.problem2 = rep.problem2 && l.classified() && l.index <= 3;
    }
    std::tie(rep.k, rep.class_index) = lost_squares(rep.labels, sys.kappa);
    return rep;
}

MissSetVerdict feasibility_miss_set(const PickSystem& sys, const std::vector<std::size_t>& subset) {
    const auto& d = sys.require_derived();
    if (subset.empty()) return MissSetVerdict::InfinitelyMany;
    for (std::size_t i : subset)
        if (i >= sys.size()) throw InvariantViolation("node index out of range");
    const HermitianMatrix sub(d.P_inv.select(subset, subset));
    const Inertia in = hermitian_inertia(sub, sys.rank_tol);
    if (in.positives > 0) return MissSetVerdict::Infeasible;
    if (in.zeros > 0) return MissSetVerdict::UniqueParameter;
    return MissSetVerdict::InfinitelyMany;
}

bool equivalence_check(const PickSystem& sys) {
    const auto& d = sys.require_derived();
    return std::all_of(d.p_tilde_diag.begin(), d.p_tilde_diag.end(),
                       [](const Scalar& p) { return p.compare_real(Scalar(0)) > 0; });
}

RationalFunction degenerate_solution(const PickSystem& sys, const std::vector<Scalar>& kernel_vector) {
    const std::size_t n = sys.size();
    if (kernel_vector.size() != n) throw InvariantViolation("kernel vector has the wrong length");
    const bool exact = sys.is_exact();
    std::vector<Scalar> x = kernel_vector;
    if (!exact) {
        // fix the free phase so a real kernel direction has real entries
        std::size_t big = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (x[k].abs() > x[big].abs()) big = k;
        const Scalar s = x[big];
        for (auto& v : x) v = (v / s).real();
    }
    const Scalar one = exact ? Scalar(1) : Scalar::from_double(1.0);
    const auto pts = sys.node_points();
    Polynomial num, den;
    for (std::size_t k = 0; k < n; ++k) {
        if (x[k].is_zero()) continue;
        Polynomial partial = Polynomial::constant(one);
        for (std::size_t m = 0; m < n; ++m)
            if (m != k) partial *= Polynomial::linear_factor(pts[m]);
        const Scalar xk = x[k].conj();
        num += partial * (xk * sys.C(0, k).conj());
        den += partial * (xk * sys.E(0, k).conj());
    }
    if (den.is_zero()) throw NoSolutionRepresentation("x*(zI - X)^{-1} E* vanishes identically for this kernel vector");
    return RationalFunction(std::move(num), std::move(den)).simplified();
}

RationalFunction solve_degenerate(const PickSystem& sys) {
    const auto basis = null_space(sys.P.matrix(), sys.rank_tol);
    if (basis.empty()) throw InvariantViolation("P has a trivial kernel; the degenerate formula does not apply");
    RationalFunction first = degenerate_solution(sys, basis.front());
    for (std::size_t b = 1; b < basis.size(); ++b) {
        const RationalFunction other = degenerate_solution(sys, basis[b]);
        if (!(other == first))
            throw InvariantViolation("kernel vectors of P give different solutions: " + first.to_string() + " vs " +
                                     other.to_string());
    }
    return first;
}

VerificationReport verify_candidate(const PickSystem& sys, const RationalFunction& w, const SolverConfig& cfg) {
    VerificationReport rep;
    rep.kappa = sys.kappa;
    rep.problem1 = rep.problem2 = true;
    const double tol = cfg.check_tol;
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const Node& nd = sys.nodes[i];
        const double x = nd.x.to_complex().real();
        if (i == 0 || x < lo) lo = x;
        if (i == 0 || x > hi) hi = x;
        NodeCheck c;
        c.node = i;
        c.kind = nd.kind;
        if (nd.is_regular()) {
            const double wi = nd.w.to_complex().real(), gi = nd.gamma.to_complex().real();
            c.value = nt_limit(w, x, LimitKind::Value, cfg.limits);
            c.derivative = nt_limit(w, x, LimitKind::Derivative, cfg.limits);
            c.value_error = c.value.finite() ? std::abs(c.value.value - cplx(wi, 0.0)) : INFINITY;
            c.second_error = c.derivative.finite() ? std::abs(c.derivative.value - cplx(gi, 0.0)) : INFINITY;
            c.problem1 = c.value_error <= tol && c.second_error <= tol;
            c.problem2 = c.value_error <= tol && c.derivative.finite() && c.derivative.real() <= gi + tol;
        } else {
            const double xi = nd.xi.to_complex().real();
            c.residual = nt_limit(w, x, LimitKind::Residual, cfg.limits);
            c.second_error = c.residual.finite() ? std::abs(c.residual.value - cplx(xi, 0.0)) : INFINITY;
            c.problem1 = c.second_error <= tol;
            c.problem2 = c.residual.finite() && std::abs(c.residual.real()) > tol &&
                         -1.0 / c.residual.real() <= -1.0 / xi + tol;
        }
        rep.problem1 = rep.problem1 && c.problem1;
        rep.problem2 = rep.problem2 && c.problem2;
        rep.nodes.push_back(std::move(c));
    }
    rep.fmi_count = fmi_check(sys, w, cfg.grid).max_negatives;
    rep.kernel_negatives = kernel_negative_squares(w, lo, hi, cfg.grid).max_negatives;
    rep.fmi_matches = rep.fmi_count == sys.kappa;
    return rep;
}

PredictionCheck check_prediction(const PickSystem& sys, std::size_t i, Outcome predicted, const RationalFunction& w,
                                 const SolverConfig& cfg) {
    PredictionCheck out;
    const Node& nd = sys.nodes[i];
    const double x = nd.x.to_complex().real();
    const double tol = cfg.prediction_tol;
    std::ostringstream os;
    if (nd.is_regular()) {
        const double wi = nd.w.to_complex().real(), gi = nd.gamma.to_complex().real();
        const auto val = nt_limit(w, x, LimitKind::Value, cfg.limits);
        const double verr = val.finite() ? std::abs(val.value - cplx(wi, 0.0)) : INFINITY;
        const bool value_eq = verr <= tol;
        os << "w(x)=" << val.to_string();
        LimitEstimate der;
        if (value_eq) {
            der = nt_limit(w, x, LimitKind::Derivative, cfg.limits);
            os << " w'(x)=" << der.to_string();
        }
        const double dv = der.finite() ? der.real() : 0.0;
        switch (predicted) {
            case Outcome::Interpolates:
                out.margin = std::max(verr, der.finite() ? std::abs(dv - gi) : INFINITY);
                out.verified = value_eq && der.finite() && std::abs(dv - gi) <= tol;
                break;
            case Outcome::BelowBound:
                out.margin = der.finite() ? gi - dv : -INFINITY;
                out.verified = value_eq && der.finite() && out.margin > tol;
                break;
            case Outcome::AboveBound:
                out.margin = der.finite() ? dv - gi : -INFINITY;
                out.verified = value_eq && der.finite() && out.margin > tol;
                break;
            case Outcome::PossiblyMissed: {
                out.margin = verr;
                bool kernel_inf = false;
                if (value_eq) kernel_inf = nt_limit(w, x, LimitKind::KernelDiagonal, cfg.limits).status == LimitStatus::Infinite;
                out.verified = !val.finite() || !value_eq || kernel_inf;
                break;
            }
            case Outcome::Missed:
                out.margin = verr;
                out.verified = val.status != LimitStatus::DoesNotExist && !value_eq;
                break;
            default:
                out.verified = false;
        }
    } else {
        const double xi = nd.xi.to_complex().real();
        const auto res = nt_limit(w, x, LimitKind::Residual, cfg.limits);
        os << "w_-1(x)=" << res.to_string();
        const double r = res.finite() ? res.real() : 0.0;
        const bool nonzero = res.finite() && std::abs(r) > tol;
        switch (predicted) {
            case Outcome::Interpolates:
                out.margin = res.finite() ? std::abs(r - xi) : INFINITY;
                out.verified = res.finite() && out.margin <= tol;
                break;
            case Outcome::BelowBound:
                out.margin = nonzero ? (-1.0 / xi) - (-1.0 / r) : -INFINITY;
                out.verified = nonzero && out.margin > tol;
                break;
            case Outcome::AboveBound:
                out.margin = nonzero ? (-1.0 / r) - (-1.0 / xi) : -INFINITY;
                out.verified = nonzero && out.margin > tol;
                break;
            case Outcome::ZeroResidual:
                out.margin = res.finite() ? std::abs(r) : INFINITY;
                out.verified = res.finite() && out.margin <= tol;
                break;
            default:
                out.verified = false;
        }
    }
    out.detail = os.str();
    return out;
}

SolutionBundle solve(const InterpolationData& data, const SolverConfig& cfg) {
    SolutionBundle b;
    b.system = build_system(data, cfg.rank_tol);
    b.kappa = b.system.kappa;
    if (!b.system.singular()) {
        b.theta = build_theta(b.system);
        b.problem = 3;
        return b;
    }
    b.w = solve_degenerate(b.system);
    b.problem = 1;
    b.verification = verify_candidate(b.system, *b.w, cfg);
    return b;
}

std::vector<Parameter> standard_sweep() {
    const RationalFunction z = RationalFunction::identity();
    return {Parameter::constant(Scalar(0)),
            Parameter::constant(Scalar(1)),
            Parameter::constant(Scalar(-2)),
            Parameter::infinity(),
            Parameter::rational(z),
            Parameter::rational(RationalFunction(Scalar(-1)) / z),
            Parameter::rational(z + RationalFunction(Scalar(2)))};
}

}  // namespace nevpick
