#ifndef NEVPICK_PROBLEM_HPP
#define NEVPICK_PROBLEM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nevpick/matrix.hpp"
#include "nevpick/scalar.hpp"

namespace nevpick {

enum class NodeKind { Regular, Singular };

/// One interpolation node. Regular nodes carry a target value w and a
/// derivative bound gamma; singular nodes carry a nonzero residue xi.
struct Node {
    NodeKind kind = NodeKind::Regular;
    Scalar x;
    Scalar w;
    Scalar gamma;
    Scalar xi;

    static Node regular(Scalar x, Scalar w, Scalar gamma) {
        return {NodeKind::Regular, std::move(x), std::move(w), std::move(gamma), Scalar(0)};
    }
    static Node singular(Scalar x, Scalar xi) { return {NodeKind::Singular, std::move(x), Scalar(0), Scalar(0), std::move(xi)}; }

    bool is_regular() const noexcept { return kind == NodeKind::Regular; }
};

/// Boundary interpolation data: real, pairwise distinct nodes; every residue
/// nonzero. Validation happens in the constructor (InvalidData).
class InterpolationData {
public:
    explicit InterpolationData(std::vector<Node> nodes);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t regular_count() const noexcept { return regular_; }
    bool is_exact() const;
    InterpolationData to_backend(Backend b) const;

    /// Permutation listing regular nodes first, then singular nodes, each
    /// group in input order: entry k is the input index of system node k.
    std::vector<std::size_t> canonical_order() const;

private:
    std::vector<Node> nodes_;
    std::size_t regular_ = 0;
};

enum class NodeOrder { Canonical, AsGiven };

/// Element of R with the point at infinity adjoined.
struct ExtendedReal {
    bool infinite = false;
    Scalar value;

    static ExtendedReal finite(Scalar v) { return {false, std::move(v)}; }
    static ExtendedReal infinity() { return {true, Scalar(0)}; }
    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

/// Quantities that exist only when P is invertible.
struct PickDerived {
    Matrix P_inv;
    std::vector<Scalar> e_tilde;  // E P^{-1}
    std::vector<Scalar> c_tilde;  // C P^{-1}
    std::vector<ExtendedReal> eta;
    std::vector<Scalar> p_tilde_diag;
};

struct PickSystem {
    std::vector<Node> nodes;          // system order
    std::vector<std::size_t> order;   // order[k] = input index of node k
    HermitianMatrix P{Matrix()};
    Matrix X;
    Matrix E;  // 1 x n
    Matrix C;  // 1 x n
    Matrix J;
    Inertia inertia;
    std::size_t kappa = 0;
    double rank_tol = 1e-9;
    std::optional<PickDerived> derived;

    std::size_t size() const noexcept { return nodes.size(); }
    bool singular() const noexcept { return !derived.has_value(); }
    bool is_exact() const { return P.matrix().is_exact(); }
    std::vector<Scalar> node_points() const;
    /// The derived block; throws SingularPick when P is singular.
    const PickDerived& require_derived() const;
};

/// [[0, -i], [i, 0]]
Matrix signature_j();

/// P for the given nodes in the given order; entries depend only on the
/// kinds of the two nodes involved.
HermitianMatrix build_pick(const std::vector<Node>& nodes);
HermitianMatrix build_pick(const InterpolationData& data, NodeOrder order = NodeOrder::Canonical);

PickSystem build_system(const InterpolationData& data, double rank_tol = 1e-9, NodeOrder order = NodeOrder::Canonical);
/// System over an explicit node list, kept in that order.
PickSystem build_system(const std::vector<Node>& nodes, double rank_tol = 1e-9);

struct LyapunovReport {
    bool exact = false;
    bool zero = false;
    double max_residual = 0.0;
    std::size_t row = 0;  // location of the largest residual entry
    std::size_t col = 0;
};

/// PX - XP - (E*C - C*E) for the given matrices.
LyapunovReport lyapunov_residual(const Matrix& P, const Matrix& X, const Matrix& E, const Matrix& C);
LyapunovReport check_lyapunov(const PickSystem& sys);

inline std::size_t negative_squares(const PickSystem& sys) { return sys.kappa; }

/// (e_i c_j - c_i e_j) / (x_i - x_j), the closed form of an off-diagonal
/// entry of P^{-1}.
Scalar reconstruct_inverse_entry(const PickSystem& sys, std::size_t i, std::size_t j);

}  // namespace nevpick

#endif  // NEVPICK_PROBLEM_HPP
