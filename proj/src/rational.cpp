#include "nevpick/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nevpick/errors.hpp"

namespace nevpick {

namespace {

constexpr double kFloatChopTol = 1e-13;
constexpr double kFloatPoleTol = 1e-13;
constexpr double kFloatEqualTol = 1e-9;

RationalFunction canonical_exact(const Polynomial& num, const Polynomial& den) {
    if (num.is_zero()) return RationalFunction(Polynomial{}, Polynomial::constant(Scalar(1)));
    const Polynomial g = exact_gcd(num, den);
    Polynomial n = num, d = den;
    if (g.degree() > 0) {
        n = num.divmod(g).first;
        d = den.divmod(g).first;
    }
    const Scalar lc = d.leading();
    return RationalFunction(n * (Scalar(1) / lc), d.monic());
}

RationalFunction canonical_float(Polynomial num, Polynomial den) {
    num = num.to_backend(Backend::Float);
    den = den.to_backend(Backend::Float);
    const double scale = std::max(num.max_abs_coefficient(), den.max_abs_coefficient());
    num = num.chopped(kFloatChopTol * scale);
    den = den.chopped(kFloatChopTol * scale);
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return RationalFunction(Polynomial{}, Polynomial::constant(Scalar::from_double(1.0)));

    // cancel root pairs that agree within the cluster tolerance
    auto num_roots = num.roots();
    auto den_roots = den.roots();
    std::vector<bool> used(den_roots.size(), false);
    for (const auto& rn : num_roots) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = den_roots.size();
        for (std::size_t j = 0; j < den_roots.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(rn - den_roots[j]);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (best_j < den_roots.size() && best <= kFloatRootClusterTol) {
            used[best_j] = true;
            const Scalar root((rn + den_roots[best_j]) * 0.5);
            num = deflate(num, root);
            den = deflate(den, root);
        }
    }
    const Scalar lc = den.leading();
    return RationalFunction(num * (Scalar::from_double(1.0) / lc), den.monic());
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvariantViolation("rational function with zero denominator");
}

RationalFunction rational_simplify(const RationalFunction& r) {
    if (r.is_exact()) return canonical_exact(r.numerator(), r.denominator());
    return canonical_float(r.numerator(), r.denominator());
}

RationalFunction RationalFunction::simplified() const { return rational_simplify(*this); }

bool RationalFunction::has_pole_near(std::complex<double> z) const {
    const auto d = den_.eval(z);
    return std::abs(d) < kFloatPoleTol * std::max(1.0, std::abs(num_.eval(z)));
}

std::optional<Scalar> RationalFunction::try_eval(const Scalar& z) const {
    if (is_exact() && z.is_exact()) {
        const Scalar d = den_(z);
        if (d.is_zero()) return std::nullopt;
        return num_(z) / d;
    }
    const auto zc = z.to_complex();
    if (has_pole_near(zc)) return std::nullopt;
    return Scalar(num_.eval(zc) / den_.eval(zc));
}

Scalar RationalFunction::operator()(const Scalar& z) const {
    if (auto v = try_eval(z)) return *v;
    throw PoleError(z.to_complex());
}

RationalFunction RationalFunction::derivative() const {
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return rational_simplify(RationalFunction(std::move(n), den_ * den_));
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero()) throw DivisionByZero();
    return rational_simplify(RationalFunction(den_, num_));
}

RationalFunction RationalFunction::to_backend(Backend b) const {
    return rational_simplify(RationalFunction(num_.to_backend(b), den_.to_backend(b)));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (den_ == rhs.den_) {
        *this = rational_simplify(RationalFunction(num_ + rhs.num_, den_));
    } else {
        *this = rational_simplify(RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_));
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    *this = rational_simplify(RationalFunction(num_ * rhs.num_, den_ * rhs.den_));
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.num_.is_zero()) throw DivisionByZero();
    *this = rational_simplify(RationalFunction(num_ * rhs.den_, den_ * rhs.num_));
    return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    const RationalFunction x = a.simplified();
    const RationalFunction y = b.simplified();
    if (x.is_exact() && y.is_exact()) return x.num_ == y.num_ && x.den_ == y.den_;
    auto same = [](const Polynomial& p, const Polynomial& q) {
        if (p.degree() != q.degree()) return false;
        for (std::size_t k = 0; k < p.coefficients().size(); ++k)
            if (!approx_equal(p.coefficients()[k], q.coefficients()[k], kFloatEqualTol)) return false;
        return true;
    };
    return same(x.num_, y.num_) && same(x.den_, y.den_);
}

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0 && den_.leading() == Scalar(1)) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

SampledRational::SampledRational(const RationalFunction& r) {
    for (const auto& c : r.numerator().coefficients()) num_.push_back(c.to_complex());
    for (const auto& c : r.denominator().coefficients()) den_.push_back(c.to_complex());
}

namespace {
std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}
}  // namespace

std::complex<double> SampledRational::operator()(std::complex<double> z) const {
    return horner(num_, z) / horner(den_, z);
}

bool SampledRational::near_pole(std::complex<double> z) const {
    return std::abs(horner(den_, z)) < kFloatPoleTol * std::max(1.0, std::abs(horner(num_, z)));
}

}  // namespace nevpick
