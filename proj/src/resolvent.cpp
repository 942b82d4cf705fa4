#include "nevpick/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "nevpick/errors.hpp"

namespace nevpick {

bool RationalMatrix2x2::is_exact() const {
    return std::all_of(e_.begin(), e_.end(), [](const RationalFunction& r) { return r.is_exact(); });
}

RationalFunction RationalMatrix2x2::determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

RationalMatrix2x2 RationalMatrix2x2::sharp() const {
    RationalMatrix2x2 s(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj());
    s.poles = poles;
    s.kappa = kappa;
    return s;
}

std::array<cplx, 4> RationalMatrix2x2::eval(cplx z) const {
    return {e_[0].eval(z), e_[1].eval(z), e_[2].eval(z), e_[3].eval(z)};
}

std::optional<std::array<Scalar, 4>> RationalMatrix2x2::try_eval(const Scalar& z) const {
    std::array<Scalar, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        auto v = e_[k].try_eval(z);
        if (!v) return std::nullopt;
        out[k] = *v;
    }
    return out;
}

RationalMatrix2x2 operator*(const RationalMatrix2x2& a, const RationalMatrix2x2& b) {
    RationalMatrix2x2 m(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                        a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
    m.poles = a.poles;
    for (const auto& p : b.poles)
        if (std::find(m.poles.begin(), m.poles.end(), p) == m.poles.end()) m.poles.push_back(p);
    m.kappa = a.kappa + b.kappa;
    return m;
}

std::string RationalMatrix2x2::to_string() const {
    return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " + e_[3].to_string() +
           "]]";
}

RationalMatrix2x2 from_residues(const std::vector<Scalar>& points, const std::vector<std::array<Scalar, 4>>& residues) {
    if (points.size() != residues.size()) throw InvariantViolation("one residue per pole expected");
    const bool exact = std::all_of(points.begin(), points.end(), [](const Scalar& s) { return s.is_exact(); });
    const Scalar one = exact ? Scalar(1) : Scalar::from_double(1.0);
    Polynomial den = Polynomial::constant(one);
    for (const auto& x : points) den *= Polynomial::linear_factor(x);
    std::vector<Polynomial> partial;
    for (std::size_t k = 0; k < points.size(); ++k) {
        Polynomial p = Polynomial::constant(one);
        for (std::size_t m = 0; m < points.size(); ++m)
            if (m != k) p *= Polynomial::linear_factor(points[m]);
        partial.push_back(std::move(p));
    }
    std::array<RationalFunction, 4> entries;
    for (std::size_t ab = 0; ab < 4; ++ab) {
        Polynomial num = (ab == 0 || ab == 3) ? den : Polynomial{};
        for (std::size_t k = 0; k < points.size(); ++k)
            if (!residues[k][ab].is_zero()) num += partial[k] * residues[k][ab];
        entries[ab] = RationalFunction(std::move(num), den).simplified();
    }
    RationalMatrix2x2 m(entries[0], entries[1], entries[2], entries[3]);
    m.poles = points;
    return m;
}

namespace {

Matrix stack_ce(const Matrix& C, const Matrix& E) {
    Matrix L(2, C.cols());
    for (std::size_t j = 0; j < C.cols(); ++j) {
        L(0, j) = C(0, j);
        L(1, j) = E(0, j);
    }
    return L;
}

// R_k = factor * L(:,k) G(k,:)
std::vector<std::array<Scalar, 4>> outer_residues(const Matrix& L, const Matrix& G, const Scalar& factor, bool real) {
    std::vector<std::array<Scalar, 4>> res;
    for (std::size_t k = 0; k < L.cols(); ++k) {
        std::array<Scalar, 4> r;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                Scalar v = factor * L(a, k) * G(k, b);
                r[2 * a + b] = real ? v.real() : v;
            }
        res.push_back(std::move(r));
    }
    return res;
}

std::vector<Scalar> slice(const std::vector<Scalar>& v, std::size_t from, std::size_t to) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

RationalMatrix2x2 j_as_rational() { return RationalMatrix2x2(Scalar(0), -Scalar::i(), Scalar::i(), Scalar(0)); }

}  // namespace

RationalMatrix2x2 build_theta(const PickSystem& sys) {
    const auto& d = sys.require_derived();
    const Matrix L = stack_ce(sys.C, sys.E);
    const Matrix G = d.P_inv * L.adjoint() * sys.J;
    // Theta has real coefficients; dropping imaginary parts only removes
    // float dust
    auto theta = from_residues(sys.node_points(), outer_residues(L, G, -Scalar::i(), !sys.is_exact()));
    theta.kappa = sys.kappa;
    return theta;
}

RationalMatrix2x2 theta_inverse(const PickSystem& sys) {
    const auto& d = sys.require_derived();
    const Matrix L = stack_ce(sys.C, sys.E);
    auto inv = from_residues(sys.node_points(), outer_residues(L * d.P_inv, L.adjoint() * sys.J, Scalar::i(), !sys.is_exact()));
    inv.kappa = sys.kappa;
    return inv;
}

RationalMatrix2x2 theta_inverse(const RationalMatrix2x2& theta) {
    const RationalFunction det = theta.determinant();
    if (det.is_zero()) throw SingularMatrix("rational matrix is identically singular");
    RationalMatrix2x2 inv(theta(1, 1) / det, -theta(0, 1) / det, -theta(1, 0) / det, theta(0, 0) / det);
    inv.poles = theta.poles;
    inv.kappa = theta.kappa;
    return inv;
}

Scalar simple_residue(const RationalFunction& r, const Scalar& x) {
    const Scalar one = x.is_exact() ? Scalar(1) : Scalar::from_double(1.0);
    const RationalFunction scaled = r * RationalFunction(Polynomial({-x, one}));
    if (auto v = scaled.try_eval(x)) return *v;
    throw PoleError(x.to_complex());
}

JUnitarityReport check_j_unitarity(const RationalMatrix2x2& theta, const std::vector<Scalar>& samples) {
    JUnitarityReport rep;
    if (theta.is_exact()) {
        rep.symbolic_checked = true;
        const RationalMatrix2x2 J = j_as_rational();
        const RationalMatrix2x2 prod = theta * J * theta.sharp();
        rep.symbolic_zero = true;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (!(prod(i, j) - J(i, j)).is_zero()) rep.symbolic_zero = false;
    }
    const cplx I(0.0, 1.0);
    const cplx Jm[4] = {0.0, -I, I, 0.0};
    for (const auto& s : samples) {
        const double x = s.to_complex().real();
        bool near_pole = false;
        for (const auto& p : theta.poles)
            if (std::abs(p.to_complex() - cplx(x, 0.0)) < 1e-9) near_pole = true;
        for (std::size_t i = 0; i < 2 && !near_pole; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (theta(i, j).has_pole_near(cplx(x, 0.0))) near_pole = true;
        if (near_pole) {
            rep.skipped.push_back(x);
            continue;
        }
        const auto t = theta.eval(cplx(x, 0.0));
        // T J T* - J
        cplx tj[4];
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) tj[2 * a + b] = t[2 * a] * Jm[b] + t[2 * a + 1] * Jm[2 + b];
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                const cplx v = tj[2 * a] * std::conj(t[2 * b]) + tj[2 * a + 1] * std::conj(t[2 * b + 1]) - Jm[2 * a + b];
                rep.max_residual = std::max(rep.max_residual, std::abs(v));
            }
    }
    return rep;
}

ThetaKernelReport kernel_theta_negative_squares(const PickSystem& sys, const RationalMatrix2x2& theta, const GridConfig& grid) {
    const auto& d = sys.require_derived();
    const std::size_t n = sys.size();
    std::vector<double> xs;
    for (const auto& x : sys.node_points()) xs.push_back(x.to_complex().real());
    const double lo = xs.empty() ? 0.0 : *std::min_element(xs.begin(), xs.end());
    const double hi = xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
    std::vector<cplx> pts;
    for (const auto& z : make_grid(grid, lo, hi)) {
        bool bad = false;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) bad = bad || theta(i, j).has_pole_near(z);
        if (!bad) pts.push_back(z);
    }
    const std::size_t m = pts.size();

    const auto pinv = d.P_inv.to_complex();
    const auto L = stack_ce(sys.C, sys.E).to_complex();  // 2 x n
    std::vector<std::array<cplx, 4>> T(m);
    std::vector<std::vector<cplx>> F(m, std::vector<cplx>(2 * n));
    for (std::size_t p = 0; p < m; ++p) {
        T[p] = theta.eval(pts[p]);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t k = 0; k < n; ++k) F[p][a * n + k] = L[a * n + k] / (pts[p] - xs[k]);
    }

    const cplx I(0.0, 1.0);
    const cplx Jm[4] = {0.0, -I, I, 0.0};
    SampledKernel kt, kr;
    kt.resize(0, 2, m);
    kr.resize(0, 2, m);
    double scale = 0.0, gap = 0.0;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            const cplx denom = -I * (pts[p] - std::conj(pts[q]));
            cplx tj[4];
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) tj[2 * a + b] = T[p][2 * a] * Jm[b] + T[p][2 * a + 1] * Jm[2 + b];
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) {
                    const cplx tjt = tj[2 * a] * std::conj(T[q][2 * b]) + tj[2 * a + 1] * std::conj(T[q][2 * b + 1]);
                    const cplx kv = (Jm[2 * a + b] - tjt) / denom;
                    cplx rv = 0.0;
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j) rv += F[p][a * n + i] * pinv[i * n + j] * std::conj(F[q][b * n + j]);
                    kt.at(2 * p + a, 2 * q + b) = kv;
                    kr.at(2 * p + a, 2 * q + b) = rv;
                    scale = std::max(scale, std::abs(rv));
                    gap = std::max(gap, std::abs(kv - rv));
                }
        }
    ThetaKernelReport rep;
    rep.points = m;
    rep.negatives = max_section_negatives(kt, grid).max_negatives;
    rep.realization_negatives = max_section_negatives(kr, grid).max_negatives;
    rep.max_mismatch = gap / std::max(1.0, scale);
    return rep;
}

Factorization factorize(const PickSystem& sys, std::size_t k) {
    const auto& d = sys.require_derived();
    const std::size_t n = sys.size();
    if (k > n) throw InvariantViolation("split index exceeds the number of nodes");
    const bool real = !sys.is_exact();
    const auto x = sys.node_points();
    const Matrix L = stack_ce(sys.C, sys.E);
    Factorization f;

    if (k > 0) {
        const HermitianMatrix P11(sys.P.matrix().block(0, 0, k, k));
        const Inertia in = hermitian_inertia(P11, sys.rank_tol);
        if (in.zeros > 0) throw SplitNotAdmissible("leading " + std::to_string(k) + "x" + std::to_string(k) + " block of P is singular");
        Matrix inv;
        try {
            inv = matrix_inverse(P11.matrix());
        } catch (const SingularMatrix&) {
            throw SplitNotAdmissible("leading block of P is numerically singular");
        }
        const Matrix L1 = L.block(0, 0, 2, k);
        f.first = from_residues(slice(x, 0, k), outer_residues(L1, inv * L1.adjoint() * sys.J, -Scalar::i(), real));
        f.first.kappa = f.kappa_first = in.negatives;
    }
    if (k < n) {
        const std::size_t r = n - k;
        const HermitianMatrix Pt22(d.P_inv.block(k, k, r, r));
        const Inertia in = hermitian_inertia(Pt22, sys.rank_tol);
        const Matrix q = matrix_inverse(Pt22.matrix());
        Matrix Lt(2, r);
        for (std::size_t j = 0; j < r; ++j) {
            Lt(0, j) = d.c_tilde[k + j];
            Lt(1, j) = d.e_tilde[k + j];
        }
        f.second = from_residues(slice(x, k, n), outer_residues(Lt * q, Lt.adjoint() * sys.J, -Scalar::i(), real));
        f.second.kappa = f.kappa_second = in.negatives;
    }
    return f;
}

}  // namespace nevpick
