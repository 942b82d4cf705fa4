#ifndef NEVPICK_SCALAR_HPP
#define NEVPICK_SCALAR_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace nevpick {

enum class Backend { Exact, Float };

/// Complex number carried either exactly (a pair of GMP rationals) or as a
/// double-precision complex. Arithmetic between two exact values stays exact;
/// any operation touching a float value promotes the result to float.
class Scalar {
public:
    struct Exact {
        mpq_class re;
        mpq_class im;
    };
    using Float = std::complex<double>;

    Scalar() : value_(Exact{0, 0}) {}
    Scalar(int v) : value_(Exact{v, 0}) {}  // NOLINT: integers are exact literals
    Scalar(long v) : value_(Exact{mpq_class(mpz_class(v)), 0}) {}  // NOLINT
    Scalar(mpq_class re, mpq_class im = 0);  // NOLINT
    Scalar(Float v) : value_(v) {}           // NOLINT

    static Scalar from_double(double re, double im = 0.0) { return Scalar(Float(re, im)); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    /// Parses "p/q", "-3", "1.25" or "2e-3" as an exact rational; decimal
    /// fractions are read exactly (1.25 -> 5/4). Throws InputError.
    static Scalar parse(std::string_view text);

    Backend backend() const noexcept { return std::holds_alternative<Exact>(value_) ? Backend::Exact : Backend::Float; }
    bool is_exact() const noexcept { return backend() == Backend::Exact; }

    const Exact& exact() const;
    Float to_complex() const;

    /// Exact zero test; floats compare against 0.0 exactly.
    bool is_zero() const;
    bool is_real() const;
    bool near_zero(double tol) const { return is_exact() ? is_zero() : std::abs(to_complex()) <= tol; }

    Scalar real() const;
    Scalar imag() const;
    Scalar conj() const;
    double abs() const { return std::abs(to_complex()); }

    /// Comparison of real parts; the imaginary parts must both be zero.
    int compare_real(const Scalar& other) const;

    Scalar to_backend(Backend b) const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    /// Exact comparison for exact pairs; floats compare bitwise-equal values.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" (exact, real), "re+imi" style for complex exact values, or
    /// shortest round-trip decimal for floats.
    std::string to_string() const;

private:
    std::variant<Exact, Float> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Approximate equality: exact when both sides are exact, otherwise
/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Scalar& a, const Scalar& b, double tol = 1e-10);

}  // namespace nevpick

#endif  // NEVPICK_SCALAR_HPP
