#ifndef NEVPICK_POLYNOMIAL_HPP
#define NEVPICK_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nevpick/scalar.hpp"

namespace nevpick {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<Scalar> coeffs);  // NOLINT
    Polynomial(std::initializer_list<Scalar> coeffs) : Polynomial(std::vector<Scalar>(coeffs)) {}

    static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
    static Polynomial monomial(const Scalar& c, std::size_t degree);
    /// z - root
    static Polynomial linear_factor(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }
    static Polynomial from_roots(std::span<const Scalar> roots, const Scalar& leading = Scalar(1));

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_exact() const;
    bool has_real_coefficients() const;
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

    Scalar operator()(const Scalar& z) const;
    std::complex<double> eval(std::complex<double> z) const;
    /// Sum |c_k| |z|^k, the natural rounding scale of a Horner evaluation.
    double magnitude_at(std::complex<double> z) const;
    double max_abs_coefficient() const;

    Polynomial derivative() const;
    Polynomial conj() const;
    Polynomial monic() const;
    Polynomial to_backend(Backend b) const;
    /// Drops trailing coefficients with |c| <= tol. Used for float cleanup.
    Polynomial chopped(double tol) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    /// Quotient and remainder of long division. Throws DivisionByZero for a
    /// zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial pow(unsigned n) const;

    /// Roots of a float view of the polynomial (companion matrix eigenvalues).
    std::vector<std::complex<double>> roots() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const char* var = "z") const;

private:
    void trim();

    std::vector<Scalar> coeffs_;
};

/// Monic greatest common divisor over the exact field. Both inputs must be
/// exact; the gcd of two zero polynomials is zero.
Polynomial exact_gcd(Polynomial a, Polynomial b);

/// Divides p by (z - root) with Horner's scheme, discarding the remainder.
Polynomial deflate(const Polynomial& p, const Scalar& root);

}  // namespace nevpick

#endif  // NEVPICK_POLYNOMIAL_HPP
