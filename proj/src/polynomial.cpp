#include "nevpick/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dense_numeric.hpp"
#include "nevpick/errors.hpp"

namespace nevpick {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Scalar> roots, const Scalar& leading) {
    Polynomial p = constant(leading);
    for (const auto& r : roots) p *= linear_factor(r);
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_exact() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

bool Polynomial::has_real_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_real(); });
}

Scalar Polynomial::operator()(const Scalar& z) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
}

double Polynomial::magnitude_at(std::complex<double> z) const {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + it->abs();
    return acc;
}

double Polynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, c.abs());
    return m;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Scalar(static_cast<int>(k)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::conj() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.conj());
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    const Scalar lc = leading();
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) c.push_back(coeffs_[k] / lc);
    // an exact 1 keeps the leading term exact even on the float backend
    c.push_back(lc.is_exact() ? Scalar(1) : Scalar::from_double(1.0));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::to_backend(Backend b) const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.to_backend(b));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::chopped(double tol) const {
    std::vector<Scalar> c = coeffs_;
    while (!c.empty() && !c.back().is_exact() && c.back().abs() <= tol) c.pop_back();
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Scalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    if (degree() < divisor.degree()) return {Polynomial{}, *this};
    std::vector<Scalar> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Scalar> quot(rem.size() - dd, Scalar(0));
    const Scalar& lc = divisor.coeffs_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Scalar q = rem[k + dd] / lc;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
        // the leading term cancels by construction; pin it so float noise
        // cannot survive in the remainder
        rem[k + dd] = Scalar(0);
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(Scalar(1));
    for (unsigned k = 0; k < n; ++k) result *= *this;
    return result;
}

std::vector<std::complex<double>> Polynomial::roots() const {
    std::vector<std::complex<double>> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.to_complex());
    return detail::companion_roots(c);
}

std::string Polynomial::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool bare = coeffs_[k] == Scalar(1) && k > 0;
        if (!bare) os << "(" << coeffs_[k] << ")";
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

Polynomial exact_gcd(Polynomial a, Polynomial b) {
    if (!a.is_exact() || !b.is_exact()) throw InvariantViolation("exact_gcd requires exact polynomials");
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Polynomial deflate(const Polynomial& p, const Scalar& root) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Scalar> q(c.size() - 1, Scalar(0));
    Scalar acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        q[k] = acc;
        acc = acc * root + c[k];
    }
    return Polynomial(std::move(q));
}

}  // namespace nevpick
