#ifndef NEVPICK_RATIONAL_HPP
#define NEVPICK_RATIONAL_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nevpick/polynomial.hpp"

namespace nevpick {

/// Float tolerance under which a root of the numerator and a root of the
/// denominator are treated as the same point during cancellation.
inline constexpr double kFloatRootClusterTol = 1e-8;

/// Ratio of two polynomials. Arithmetic always returns canonical values:
/// coprime numerator and denominator with a monic denominator (for float
/// coefficients "monic" means leading coefficient 1, hence unit modulus).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(Scalar(1))) {}
    RationalFunction(const Scalar& c)  // NOLINT: constants embed implicitly
        : num_(Polynomial::constant(c)), den_(Polynomial::constant(Scalar(1))) {}
    RationalFunction(Polynomial p)  // NOLINT: polynomials embed implicitly
        : num_(std::move(p)), den_(Polynomial::constant(Scalar(1))) {}
    /// Stores the pair as given; call simplified() for the canonical form.
    /// Throws InvariantViolation for a zero denominator.
    RationalFunction(Polynomial num, Polynomial den);

    /// The identity function z.
    static RationalFunction identity() { return RationalFunction(Polynomial({Scalar(0), Scalar(1)})); }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_exact() const { return num_.is_exact() && den_.is_exact(); }
    bool has_real_coefficients() const { return num_.has_real_coefficients() && den_.has_real_coefficients(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RationalFunction simplified() const;

    /// r(z); throws PoleError when z is a root of the denominator (exactly
    /// for exact data, |den(z)| < 1e-13 * max(1, |num(z)|) for floats).
    Scalar operator()(const Scalar& z) const;
    std::optional<Scalar> try_eval(const Scalar& z) const;
    /// Plain float evaluation with no pole check.
    std::complex<double> eval(std::complex<double> z) const { return num_.eval(z) / den_.eval(z); }
    bool has_pole_near(std::complex<double> z) const;

    RationalFunction derivative() const;
    /// Coefficientwise conjugate, i.e. the function z -> r(conj z)^*.
    RationalFunction conj() const { return RationalFunction(num_.conj(), den_.conj()); }
    RationalFunction reciprocal() const;
    RationalFunction to_backend(Backend b) const;

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }

    /// Equality of canonical forms. Exact on the exact backend; float
    /// comparisons use a 1e-9 relative coefficient tolerance.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// The canonical form of r; the operation behind RationalFunction::simplified.
RationalFunction rational_simplify(const RationalFunction& r);

/// Quotient-rule derivative in canonical form.
inline RationalFunction rational_derivative(const RationalFunction& r) { return r.derivative(); }

/// Float snapshot of a rational function for fast repeated sampling.
class SampledRational {
public:
    explicit SampledRational(const RationalFunction& r);
    std::complex<double> operator()(std::complex<double> z) const;
    bool near_pole(std::complex<double> z) const;

private:
    std::vector<std::complex<double>> num_;
    std::vector<std::complex<double>> den_;
};

}  // namespace nevpick

#endif  // NEVPICK_RATIONAL_HPP
