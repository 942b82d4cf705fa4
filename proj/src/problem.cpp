#include "nevpick/problem.hpp"

#include <algorithm>
#include <cmath>

#include "nevpick/errors.hpp"

namespace nevpick {

namespace {

void require_real(const Scalar& s, const char* what, std::size_t index) {
    if (!s.is_real()) throw InvalidData(std::string(what) + " of node " + std::to_string(index) + " is not real");
}

bool same_point(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a == b;
    return a.to_complex() == b.to_complex();
}

Scalar zero_like(bool exact) { return exact ? Scalar(0) : Scalar::from_double(0.0); }

}  // namespace

InterpolationData::InterpolationData(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        require_real(n.x, "x", i);
        if (n.is_regular()) {
            require_real(n.w, "w", i);
            require_real(n.gamma, "gamma", i);
            ++regular_;
        } else {
            require_real(n.xi, "xi", i);
            if (n.xi.is_zero()) throw InvalidData("residue xi of node " + std::to_string(i) + " must be nonzero");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (same_point(nodes_[j].x, n.x))
                throw InvalidData("duplicate node x = " + n.x.to_string() + " at positions " + std::to_string(j) + " and " +
                                  std::to_string(i));
    }
}

bool InterpolationData::is_exact() const {
    return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) {
        return n.x.is_exact() && n.w.is_exact() && n.gamma.is_exact() && n.xi.is_exact();
    });
}

InterpolationData InterpolationData::to_backend(Backend b) const {
    std::vector<Node> out = nodes_;
    for (auto& n : out) {
        n.x = n.x.to_backend(b);
        n.w = n.w.to_backend(b);
        n.gamma = n.gamma.to_backend(b);
        n.xi = n.xi.to_backend(b);
    }
    return InterpolationData(std::move(out));
}

std::vector<std::size_t> InterpolationData::canonical_order() const {
    std::vector<std::size_t> order;
    order.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].is_regular()) order.push_back(i);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (!nodes_[i].is_regular()) order.push_back(i);
    return order;
}

std::vector<Scalar> PickSystem::node_points() const {
    std::vector<Scalar> x;
    x.reserve(nodes.size());
    for (const auto& n : nodes) x.push_back(n.x);
    return x;
}

const PickDerived& PickSystem::require_derived() const {
    if (!derived) throw SingularPick();
    return *derived;
}

Matrix signature_j() {
    Matrix j(2, 2);
    j(0, 1) = -Scalar::i();
    j(1, 0) = Scalar::i();
    return j;
}

HermitianMatrix build_pick(const std::vector<Node>& nodes) {
    const std::size_t n = nodes.size();
    bool exact = true;
    for (const auto& nd : nodes) exact = exact && nd.x.is_exact() && nd.w.is_exact() && nd.gamma.is_exact() && nd.xi.is_exact();
    Matrix p(n, n, zero_like(exact));
    for (std::size_t i = 0; i < n; ++i) {
        const Node& a = nodes[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Node& b = nodes[j];
            if (i == j) {
                p(i, j) = a.is_regular() ? a.gamma : -a.xi;
                continue;
            }
            if (same_point(a.x, b.x)) throw InvalidData("duplicate node x = " + a.x.to_string());
            if (a.is_regular() && b.is_regular()) {
                p(i, j) = (b.w - a.w) / (b.x - a.x);
            } else if (a.is_regular()) {
                p(i, j) = b.xi / (b.x - a.x);
            } else if (b.is_regular()) {
                p(i, j) = a.xi / (a.x - b.x);
            }
        }
    }
    return HermitianMatrix(std::move(p));
}

HermitianMatrix build_pick(const InterpolationData& data, NodeOrder order) {
    if (order == NodeOrder::AsGiven) return build_pick(data.nodes());
    std::vector<Node> nodes;
    for (std::size_t k : data.canonical_order()) nodes.push_back(data.nodes()[k]);
    return build_pick(nodes);
}

PickSystem build_system(const std::vector<Node>& nodes, double rank_tol) {
    PickSystem sys;
    sys.nodes = nodes;
    sys.order.resize(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) sys.order[k] = k;
    sys.P = build_pick(nodes);
    sys.rank_tol = rank_tol;

    const bool exact = sys.P.matrix().is_exact();
    const std::size_t n = nodes.size();
    std::vector<Scalar> x, e, c;
    for (const auto& nd : nodes) {
        x.push_back(nd.x);
        e.push_back(nd.is_regular() ? (exact ? Scalar(1) : Scalar::from_double(1.0)) : zero_like(exact));
        c.push_back(nd.is_regular() ? nd.w : nd.xi);
    }
    sys.X = Matrix::diagonal(x);
    sys.E = Matrix::row(e);
    sys.C = Matrix::row(c);
    sys.J = signature_j();
    sys.inertia = hermitian_inertia(sys.P, rank_tol);
    sys.kappa = sys.inertia.negatives;

    if (sys.inertia.zeros > 0) return sys;
    PickDerived d;
    try {
        d.P_inv = matrix_inverse(sys.P.matrix());
    } catch (const SingularMatrix&) {
        return sys;
    }
    const Matrix et = sys.E * d.P_inv;
    const Matrix ct = sys.C * d.P_inv;
    for (std::size_t i = 0; i < n; ++i) {
        // P is real symmetric, so these rows are real; drop float dust in
        // the imaginary parts
        Scalar ei = et(0, i).real(), ci = ct(0, i).real();
        d.e_tilde.push_back(ei);
        d.c_tilde.push_back(ci);
        d.p_tilde_diag.push_back(d.P_inv(i, i).real());
        const bool e_zero = exact ? ei.is_zero() : ei.abs() <= 1e-12 * std::max(1.0, ci.abs());
        d.eta.push_back(e_zero ? ExtendedReal::infinity() : ExtendedReal::finite(ci / ei));
    }
    sys.derived = std::move(d);
    return sys;
}

PickSystem build_system(const InterpolationData& data, double rank_tol, NodeOrder order) {
    if (order == NodeOrder::AsGiven) return build_system(data.nodes(), rank_tol);
    const auto perm = data.canonical_order();
    std::vector<Node> nodes;
    for (std::size_t k : perm) nodes.push_back(data.nodes()[k]);
    PickSystem sys = build_system(nodes, rank_tol);
    sys.order = perm;
    return sys;
}

LyapunovReport lyapunov_residual(const Matrix& P, const Matrix& X, const Matrix& E, const Matrix& C) {
    const Matrix r = P * X - X * P - (E.adjoint() * C - C.adjoint() * E);
    LyapunovReport rep;
    rep.exact = r.is_exact();
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            const double a = r(i, j).abs();
            if (a > rep.max_residual) {
                rep.max_residual = a;
                rep.row = i;
                rep.col = j;
            }
        }
    if (rep.exact) {
        rep.zero = true;
        for (std::size_t i = 0; i < r.rows() && rep.zero; ++i)
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (!r(i, j).is_zero()) {
                    rep.zero = false;
                    break;
                }
    } else {
        rep.zero = rep.max_residual <= 1e-12 * std::max(1.0, P.max_abs());
    }
    return rep;
}

LyapunovReport check_lyapunov(const PickSystem& sys) { return lyapunov_residual(sys.P.matrix(), sys.X, sys.E, sys.C); }

Scalar reconstruct_inverse_entry(const PickSystem& sys, std::size_t i, std::size_t j) {
    const auto& d = sys.require_derived();
    if (i == j) throw InvariantViolation("closed form covers off-diagonal entries only");
    return (d.e_tilde[i] * d.c_tilde[j] - d.c_tilde[i] * d.e_tilde[j]) / (sys.nodes[i].x - sys.nodes[j].x);
}

}  // namespace nevpick
