#include "nevpick/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "nevpick/errors.hpp"
#include "nevpick/transform.hpp"

namespace nevpick {

std::string to_string(LimitKind k) {
    switch (k) {
        case LimitKind::Value:
            return "value";
        case LimitKind::Derivative:
            return "derivative";
        case LimitKind::Residual:
            return "residual";
        case LimitKind::KernelDiagonal:
            return "kernel_diagonal";
    }
    return "?";
}

std::string to_string(LimitStatus s) {
    switch (s) {
        case LimitStatus::Finite:
            return "finite";
        case LimitStatus::Infinite:
            return "inf";
        case LimitStatus::DoesNotExist:
            return "dne";
    }
    return "?";
}

std::string LimitEstimate::to_string() const {
    if (status != LimitStatus::Finite) return nevpick::to_string(status);
    return Scalar(value).to_string();
}

LimitEstimate extrapolate_limit(const std::function<cplx(double)>& g, const LimitConfig& cfg) {
    LimitEstimate est;
    std::vector<cplx> raw, r1;
    double best = std::numeric_limits<double>::infinity();
    cplx best_value{};
    for (int k = 0; k <= cfg.max_steps; ++k) {
        const double h = cfg.t0 * std::ldexp(1.0, -k);
        const cplx gk = g(h);
        if (!std::isfinite(gk.real()) || !std::isfinite(gk.imag())) {
            // the path crossed a pole: restart the tableau below it
            raw.clear();
            r1.clear();
            est.approximants.clear();
            best = std::numeric_limits<double>::infinity();
            continue;
        }
        raw.push_back(gk);
        const std::size_t n = raw.size();
        if (n >= 2) r1.push_back(2.0 * raw[n - 1] - raw[n - 2]);
        if (n >= 3) {
            const std::size_t j = r1.size() - 1;
            est.approximants.push_back((4.0 * r1[j] - r1[j - 1]) / 3.0);
        }
        const std::size_t a = est.approximants.size();
        if (a >= 2) {
            const cplx cur = est.approximants[a - 1];
            const double diff = std::abs(cur - est.approximants[a - 2]);
            if (diff < best) {
                best = diff;
                best_value = cur;
            }
            if (diff <= cfg.stop_tol * std::max(1.0, std::abs(cur))) {
                est.status = LimitStatus::Finite;
                est.value = cur;
                est.converged = true;
                est.error = diff;
                return est;
            }
        }
        const int last = static_cast<int>(n) - 1;
        if (k >= cfg.growth_from && last >= cfg.growth_window) {
            bool monotone = true;
            for (int s = last - cfg.growth_window + 1; s <= last; ++s)
                monotone = monotone && std::abs(raw[s]) > std::abs(raw[s - 1]);
            if (monotone && std::abs(raw[last]) >= cfg.growth_factor * std::abs(raw[last - cfg.growth_window])) {
                est.status = LimitStatus::Infinite;
                est.error = 0.0;
                return est;
            }
        }
    }
    if (best <= cfg.limit_tol * std::max(1.0, std::abs(best_value))) {
        est.status = LimitStatus::Finite;
        est.value = best_value;
        est.error = best;
    } else {
        est.status = LimitStatus::DoesNotExist;
        est.error = best;
    }
    return est;
}

namespace {

LimitEstimate path_limit(const RationalFunction& f, double x0, LimitKind kind, cplx dir, const LimitConfig& cfg) {
    const SampledRational s(kind == LimitKind::Derivative ? f.derivative() : f);
    const cplx base(x0, 0.0);
    std::function<cplx(double)> g;
    switch (kind) {
        case LimitKind::Value:
        case LimitKind::Derivative:
            g = [&](double h) { return s(base + dir * h); };
            break;
        case LimitKind::Residual:
            g = [&](double h) { return dir * h * s(base + dir * h); };
            break;
        case LimitKind::KernelDiagonal:
            g = [&](double h) {
                const cplx z = base + dir * h;
                return cplx(s(z).imag() / z.imag(), 0.0);
            };
            break;
    }
    LimitEstimate est = extrapolate_limit(g, cfg);
    est.kind = kind;
    return est;
}

// The exact real point x0 when it is representable (every double is).
Scalar exact_point(double x0) { return Scalar(mpq_class(x0)); }

LimitEstimate negated_reciprocal(LimitEstimate e) {
    if (e.status == LimitStatus::Finite) {
        if (e.value == cplx(0.0, 0.0)) {
            e.status = LimitStatus::Infinite;
        } else {
            e.value = -1.0 / e.value;
        }
    } else if (e.status == LimitStatus::Infinite) {
        e.status = LimitStatus::Finite;
        e.value = 0.0;
    }
    return e;
}

}  // namespace

LimitEstimate nt_limit(const RationalFunction& f, double x0, LimitKind kind, const LimitConfig& cfg) {
    return path_limit(f, x0, kind, cplx(0.0, 1.0), cfg);
}

LimitEstimate nt_limit_tilted(const RationalFunction& f, double x0, LimitKind kind, const LimitConfig& cfg) {
    return path_limit(f, x0, kind, cplx(1.0, 1.0), cfg);
}

CJReport caratheodory_julia_check(const RationalFunction& f, double x0, const LimitConfig& cfg) {
    CJReport rep;
    rep.boundary_value = nt_limit(f, x0, LimitKind::Value, cfg);
    const Scalar xe = exact_point(x0);
    const Scalar one = f.is_exact() ? Scalar(1) : Scalar::from_double(1.0);
    const RationalFunction shift(Polynomial({f.is_exact() ? -xe : -xe.to_backend(Backend::Float), one}));

    if (rep.boundary_value.status == LimitStatus::Finite) {
        rep.route = CJRoute::Bounded;
        rep.labels = {"liminf K_f(z,z)", "lim K_f(z,z)", "lim f'(z)", "lim (f(z)-f(x0))/(z-x0)"};
        rep.limits[0] = nt_limit_tilted(f, x0, LimitKind::KernelDiagonal, cfg);
        rep.limits[1] = nt_limit(f, x0, LimitKind::KernelDiagonal, cfg);
        rep.limits[2] = nt_limit(f, x0, LimitKind::Derivative, cfg);
        Scalar a = Scalar::from_double(rep.boundary_value.value.real());
        if (f.is_exact()) {
            if (auto v = f.try_eval(xe)) a = *v;
        }
        const RationalFunction quotient = (f - RationalFunction(a)) / shift;
        rep.limits[3] = nt_limit(quotient, x0, LimitKind::Value, cfg);
    } else if (rep.boundary_value.status == LimitStatus::Infinite) {
        rep.route = CJRoute::Unbounded;
        rep.labels = {"-1/liminf K_g(z,z)", "-1/lim K_g(z,z)", "lim (z-x0) f(z)", "lim -(z-x0)^2 f'(z)"};
        const RationalFunction g = -f.reciprocal();
        rep.limits[0] = negated_reciprocal(nt_limit_tilted(g, x0, LimitKind::KernelDiagonal, cfg));
        rep.limits[1] = negated_reciprocal(nt_limit(g, x0, LimitKind::KernelDiagonal, cfg));
        rep.limits[2] = nt_limit(f, x0, LimitKind::Residual, cfg);
        rep.limits[3] = nt_limit(-(shift * shift * f.derivative()), x0, LimitKind::Value, cfg);
    } else {
        return rep;
    }
    rep.all_finite = std::all_of(rep.limits.begin(), rep.limits.end(), [](const LimitEstimate& e) { return e.finite(); });
    if (rep.all_finite)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                rep.discrepancy = std::max(rep.discrepancy, std::abs(rep.limits[i].value - rep.limits[j].value));
    return rep;
}

SectionResult kernel_negative_squares(const RationalFunction& f, double lo, double hi, const GridConfig& grid) {
    const SampledRational s(f);
    std::vector<cplx> pts, vals;
    for (const auto& z : make_grid(grid, lo, hi)) {
        if (s.near_pole(z)) continue;
        pts.push_back(z);
        vals.push_back(s(z));
    }
    SampledKernel k;
    k.resize(0, 1, pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            k.at(i, j) = (vals[i] - std::conj(vals[j])) / (pts[i] - std::conj(pts[j]));
    return max_section_negatives(k, grid);
}

SectionResult fmi_check(const PickSystem& sys, const RationalFunction& w, const GridConfig& grid) {
    const std::size_t n = sys.size();
    std::vector<double> xs, e, c;
    for (const auto& nd : sys.nodes) {
        xs.push_back(nd.x.to_complex().real());
        e.push_back(nd.is_regular() ? 1.0 : 0.0);
        c.push_back(nd.is_regular() ? nd.w.to_complex().real() : nd.xi.to_complex().real());
    }
    const double lo = xs.empty() ? 0.0 : *std::min_element(xs.begin(), xs.end());
    const double hi = xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
    const SampledRational s(w);
    std::vector<cplx> pts, vals;
    for (const auto& z : make_grid(grid, lo, hi)) {
        if (s.near_pole(z)) continue;
        pts.push_back(z);
        vals.push_back(s(z));
    }
    const std::size_t m = pts.size();
    SampledKernel k;
    k.resize(n, 1, m);
    const auto P = sys.P.matrix().to_complex();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k.at(i, j) = P[i * n + j];
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t i = 0; i < n; ++i) {
            const cplx v = (vals[q] * e[i] - c[i]) / (pts[q] - xs[i]);
            k.at(i, n + q) = v;
            k.at(n + q, i) = std::conj(v);
        }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            k.at(n + p, n + q) = (vals[q] - std::conj(vals[p])) / (pts[q] - std::conj(pts[p]));
    return max_section_negatives(k, grid);
}

RationalFunction cayley_transform(const RationalFunction& w) {
    const bool exact = w.is_exact();
    const Scalar one = exact ? Scalar(1) : Scalar::from_double(1.0);
    const Scalar i = exact ? Scalar::i() : Scalar::from_double(0.0, 1.0);
    const Polynomial A({i, i});        // i (1 + zeta)
    const Polynomial B({one, -one});   // 1 - zeta
    const auto& p = w.numerator().coefficients();
    const auto& q = w.denominator().coefficients();
    const std::size_t d = std::max(p.size(), q.size()) - 1;
    auto homog = [&](const std::vector<Scalar>& c) {
        Polynomial out;
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) out += A.pow(static_cast<unsigned>(k)) * B.pow(static_cast<unsigned>(d - k)) * c[k];
        return out;
    };
    const Polynomial ph = homog(p), qh = homog(q);
    const Polynomial den = ph + qh * i;
    if (den.is_zero()) throw InvalidFunction("w = -i is not a generalized Nevanlinna function");
    return RationalFunction(ph - qh * i, den).simplified();
}

RationalFunction cayley_transform(const Parameter& phi) {
    switch (phi.kind()) {
        case Parameter::Kind::Infinity:
            return RationalFunction(Scalar(1));
        case Parameter::Kind::Constant:
            return cayley_transform(RationalFunction(phi.value()));
        case Parameter::Kind::Rational:
            break;
    }
    return cayley_transform(phi.function());
}

double cayley_kernel_defect(const RationalFunction& w, const RationalFunction& S, std::size_t pairs, std::uint64_t seed) {
    const SampledRational sw(w), ss(S);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const cplx I(0.0, 1.0);
    auto draw = [&] { return std::polar(0.9 * std::sqrt(u(rng)), 2.0 * M_PI * u(rng)); };
    double worst = 0.0;
    std::size_t used = 0;
    for (std::size_t attempt = 0; used < pairs && attempt < 50 * pairs; ++attempt) {
        const cplx z1 = draw(), z2 = draw();
        const cplx x1 = I * (1.0 + z1) / (1.0 - z1), x2 = I * (1.0 + z2) / (1.0 - z2);
        if (sw.near_pole(x1) || sw.near_pole(x2) || ss.near_pole(z1) || ss.near_pole(z2)) continue;
        const cplx w1 = sw(x1), w2 = sw(x2), s1 = ss(z1), s2 = ss(z2);
        const cplx ks = (1.0 - s1 * std::conj(s2)) / (1.0 - z1 * std::conj(z2));
        const cplx kw = (w1 - std::conj(w2)) / (x1 - std::conj(x2));
        const cplx phi1 = (x1 + I) / (w1 + I), phi2 = (x2 + I) / (w2 + I);
        worst = std::max(worst, std::abs(ks - phi1 * kw * std::conj(phi2)));
        ++used;
    }
    return worst;
}

BlaschkeValue blaschke_boundary_value(const std::vector<cplx>& zeros, cplx t0, const LimitConfig& cfg) {
    if (std::abs(std::abs(t0) - 1.0) > 1e-12) throw InvalidData("boundary point must lie on the unit circle");
    for (const auto& c : zeros)
        if (!(std::abs(c) < 1.0)) throw InvalidData("Blaschke zeros must lie in the open unit disk");
    BlaschkeValue out;
    for (const auto& c : zeros) out.closed_form += (1.0 - std::norm(c)) / std::norm(1.0 - t0 * std::conj(c));
    auto g = [&](double h) {
        const cplx z = t0 * (1.0 - h);
        cplx b = 1.0;
        for (const auto& c : zeros) b *= (z - c) / (1.0 - std::conj(c) * z);
        return cplx((1.0 - std::norm(b)) / (1.0 - std::norm(z)), 0.0);
    };
    out.extrapolated = extrapolate_limit(g, cfg);
    out.extrapolated.kind = LimitKind::KernelDiagonal;
    out.discrepancy = out.extrapolated.finite() ? std::abs(out.extrapolated.value.real() - out.closed_form)
                                                : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace nevpick
