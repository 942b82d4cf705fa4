#include "nevpick/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "nevpick/errors.hpp"

namespace nevpick {

namespace {

mpq_class parse_decimal(std::string_view text) {
    // sign, digits, optional fraction, optional exponent
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool in_fraction = false;
    std::size_t pos = 0;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (in_fraction) --scale;
        } else if (c == '.' && !in_fraction) {
            in_fraction = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw InputError("not a number: '" + std::string(text) + "'");
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') throw InputError("not a number: '" + std::string(text) + "'");
        std::string_view exp = s.substr(pos + 1);
        if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
        long e = 0;
        auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
        if (ec != std::errc{} || ptr != exp.data() + exp.size() || exp.empty())
            throw InputError("bad exponent in '" + std::string(text) + "'");
        scale += e;
    }
    mpz_class mantissa(digits, 10);
    mpq_class result(mantissa);
    if (scale != 0) {
        mpz_class ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
        if (scale > 0)
            result *= ten_pow;
        else
            result /= ten_pow;
    }
    result.canonicalize();
    return negative ? mpq_class(-result) : result;
}

mpq_class parse_rational_part(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    const mpq_class num = parse_decimal(text.substr(0, slash));
    const mpq_class den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    mpq_class q = num / den;
    q.canonicalize();
    return q;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return std::to_string(v);
    return std::string(buf, ptr);
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : value_(Exact{std::move(re), std::move(im)}) {
    auto& e = std::get<Exact>(value_);
    e.re.canonicalize();
    e.im.canonicalize();
}

Scalar Scalar::parse(std::string_view raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw InputError("empty number");
    return Scalar(parse_rational_part(text));
}

const Scalar::Exact& Scalar::exact() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return *e;
    throw InvariantViolation("exact value requested from a float scalar");
}

Scalar::Float Scalar::to_complex() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return {e->re.get_d(), e->im.get_d()};
    return std::get<Float>(value_);
}

bool Scalar::is_zero() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return e->re == 0 && e->im == 0;
    return std::get<Float>(value_) == Float(0.0, 0.0);
}

bool Scalar::is_real() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return e->im == 0;
    return std::get<Float>(value_).imag() == 0.0;
}

Scalar Scalar::real() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return Scalar(e->re);
    return Scalar(Float(std::get<Float>(value_).real(), 0.0));
}

Scalar Scalar::imag() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return Scalar(e->im);
    return Scalar(Float(std::get<Float>(value_).imag(), 0.0));
}

Scalar Scalar::conj() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return Scalar(e->re, -e->im);
    return Scalar(std::conj(std::get<Float>(value_)));
}

int Scalar::compare_real(const Scalar& other) const {
    if (is_exact() && other.is_exact()) {
        const int c = cmp(exact().re, other.exact().re);
        return (c > 0) - (c < 0);
    }
    const double a = to_complex().real(), b = other.to_complex().real();
    return (a > b) - (a < b);
}

Scalar Scalar::to_backend(Backend b) const {
    if (b == Backend::Float) return Scalar(to_complex());
    if (is_exact()) return *this;
    const Float f = to_complex();
    return Scalar(mpq_class(f.real()), mpq_class(f.imag()));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (is_exact() && rhs.is_exact()) {
        auto& e = std::get<Exact>(value_);
        e.re += rhs.exact().re;
        e.im += rhs.exact().im;
    } else {
        value_ = to_complex() + rhs.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (is_exact() && rhs.is_exact()) {
        auto& e = std::get<Exact>(value_);
        e.re -= rhs.exact().re;
        e.im -= rhs.exact().im;
    } else {
        value_ = to_complex() - rhs.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (is_exact() && rhs.is_exact()) {
        auto& e = std::get<Exact>(value_);
        const auto& r = rhs.exact();
        if (e.im == 0 && r.im == 0) {
            e.re *= r.re;
        } else {
            mpq_class re = e.re * r.re - e.im * r.im;
            mpq_class im = e.re * r.im + e.im * r.re;
            e.re = std::move(re);
            e.im = std::move(im);
        }
    } else {
        value_ = to_complex() * rhs.to_complex();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    if (is_exact() && rhs.is_exact()) {
        auto& e = std::get<Exact>(value_);
        const auto& r = rhs.exact();
        if (r.im == 0) {
            e.re /= r.re;
            e.im /= r.re;
        } else {
            const mpq_class norm = r.re * r.re + r.im * r.im;
            mpq_class re = (e.re * r.re + e.im * r.im) / norm;
            mpq_class im = (e.im * r.re - e.re * r.im) / norm;
            e.re = std::move(re);
            e.im = std::move(im);
        }
    } else {
        value_ = to_complex() / rhs.to_complex();
    }
    return *this;
}

Scalar Scalar::operator-() const {
    if (const auto* e = std::get_if<Exact>(&value_)) return Scalar(-e->re, -e->im);
    return Scalar(-std::get<Float>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.exact().re == b.exact().re && a.exact().im == b.exact().im;
    return a.to_complex() == b.to_complex();
}

std::string Scalar::to_string() const {
    if (const auto* e = std::get_if<Exact>(&value_)) {
        if (e->im == 0) return e->re.get_str();
        std::string s = e->re == 0 ? std::string{} : e->re.get_str();
        if (e->re != 0 && e->im > 0) s += "+";
        if (e->im == 1)
            s += "i";
        else if (e->im == -1)
            s += "-i";
        else
            s += e->im.get_str() + "i";
        return s;
    }
    const Float f = std::get<Float>(value_);
    if (f.imag() == 0.0) return format_double(f.real());
    return format_double(f.real()) + (f.imag() >= 0 ? "+" : "") + format_double(f.imag()) + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
    if (a.is_exact() && b.is_exact()) return a == b;
    const auto x = a.to_complex(), y = b.to_complex();
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace nevpick
