#include "nevpick/transform.hpp"

#include <algorithm>
#include <limits>

#include "nevpick/errors.hpp"

namespace nevpick {

Parameter Parameter::constant(Scalar c) {
    if (!c.is_real()) throw InvalidParameter("constant parameter " + c.to_string() + " is not real");
    return Parameter(Kind::Constant, std::move(c), RationalFunction());
}

Parameter Parameter::rational(RationalFunction f) {
    f = f.simplified();
    if (!f.has_real_coefficients())
        throw InvalidParameter("parameter " + f.to_string() +
                               " has non-real coefficients; only real-coefficient rational parameters are supported");
    return Parameter(Kind::Rational, Scalar(0), std::move(f));
}

std::pair<RationalFunction, RationalFunction> Parameter::homogeneous() const {
    switch (kind_) {
        case Kind::Constant:
            return {RationalFunction(value_), RationalFunction(Scalar(1))};
        case Kind::Infinity:
            return {RationalFunction(Scalar(1)), RationalFunction(Scalar(0))};
        case Kind::Rational:
            break;
    }
    return {RationalFunction(fn_.numerator()), RationalFunction(fn_.denominator())};
}

std::string Parameter::to_string() const {
    switch (kind_) {
        case Kind::Constant:
            return value_.to_string();
        case Kind::Infinity:
            return "inf";
        case Kind::Rational:
            break;
    }
    return fn_.to_string();
}

GridConfig parameter_grid() {
    GridConfig g;
    for (double im : {1.0, 0.25, 4.0})
        for (int re = -3; re <= 3; ++re) g.explicit_points.emplace_back(static_cast<double>(re), im);
    g.eig_tol = 1e-10;
    return g;
}

NevanlinnaCheck is_nevanlinna(const Parameter& phi, const GridConfig& grid) {
    NevanlinnaCheck res;
    if (phi.kind() != Parameter::Kind::Rational) return res;
    const SampledRational f(phi.function());
    std::vector<cplx> pts;
    std::vector<cplx> vals;
    for (const auto& z : make_grid(grid, 0.0, 0.0)) {
        if (z.imag() <= 0.0 || f.near_pole(z)) continue;
        pts.push_back(z);
        vals.push_back(f(z));
    }
    const double slack = 1e-10;
    // 1x1 sections first: they give the most readable witness
    res.worst_diagonal = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double d = vals[k].imag() / pts[k].imag();
        res.worst_diagonal = std::min(res.worst_diagonal, d);
        if (res.ok && d < -slack * std::max(1.0, std::abs(d))) {
            res.ok = false;
            res.witness = {pts[k]};
        }
    }
    if (!res.ok) return res;

    SampledKernel k;
    k.resize(0, 1, pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            k.at(i, j) = (vals[i] - std::conj(vals[j])) / (pts[i] - std::conj(pts[j]));
    GridConfig cfg = grid;
    cfg.eig_tol = slack;
    const auto sec = max_section_negatives(k, cfg);
    if (sec.max_negatives > 0) {
        res.ok = false;
        for (std::size_t idx : sec.witness) res.witness.push_back(pts[idx]);
    }
    return res;
}

RationalFunction apply_lft(const RationalMatrix2x2& theta, const Parameter& phi) {
    const auto [p, q] = phi.homogeneous();
    const RationalFunction num = theta(0, 0) * p + theta(0, 1) * q;
    const RationalFunction den = theta(1, 0) * p + theta(1, 1) * q;
    if (den.is_zero()) throw DegenerateTransform();
    return num / den;
}

Parameter lft_parameter(const RationalMatrix2x2& theta, const Parameter& phi) {
    try {
        return Parameter::rational(apply_lft(theta, phi));
    } catch (const DegenerateTransform&) {
        return Parameter::infinity();
    }
}

}  // namespace nevpick
