#ifndef NEVPICK_TEST_SUPPORT_HPP
#define NEVPICK_TEST_SUPPORT_HPP

// Shared fixtures and random generators for the test binaries.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "nevpick/matrix.hpp"
#include "nevpick/problem.hpp"
#include "nevpick/rational.hpp"

namespace nevpick::testing {

inline Scalar q(long num, long den = 1) { return Scalar(mpq_class(num, den)); }

inline InterpolationData ex101() { return InterpolationData({Node::regular(0, 0, -1), Node::regular(1, 1, 1)}); }
inline InterpolationData ex102() { return InterpolationData({Node::regular(1, 0, -1), Node::singular(0, -1)}); }
inline InterpolationData ex103() { return InterpolationData({Node::regular(q(-1, 2), 0, -1), Node::singular(q(1, 2), 1)}); }

inline RationalFunction z() { return RationalFunction::identity(); }
inline RationalFunction rat(std::vector<Scalar> num, std::vector<Scalar> den) {
    return RationalFunction(Polynomial(std::move(num)), Polynomial(std::move(den))).simplified();
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    // p/q with |p| <= span * q, q in 1..max_den
    Scalar rational(long span = 4, long max_den = 4) {
        const long d = integer(1, max_den);
        return q(integer(-span * d, span * d), d);
    }
    Scalar nonzero_rational(long span = 4, long max_den = 4) {
        for (;;) {
            Scalar s = rational(span, max_den);
            if (!s.is_zero()) return s;
        }
    }
    Scalar complex_rational() { return rational() + rational() * Scalar::i(); }

    // Distinct half-integer nodes in [-5, 5].
    std::vector<Scalar> distinct_points(std::size_t n) {
        std::set<long> used;
        std::vector<Scalar> xs;
        while (xs.size() < n) {
            const long v = integer(-10, 10);
            if (used.insert(v).second) xs.push_back(q(v, 2));
        }
        return xs;
    }

    // n nodes, roughly a third singular, kinds interleaved at random.
    InterpolationData data(std::size_t n) {
        const auto xs = distinct_points(n);
        std::vector<Node> nodes;
        for (std::size_t i = 0; i < n; ++i) {
            if (integer(0, 2) == 0)
                nodes.push_back(Node::singular(xs[i], nonzero_rational()));
            else
                nodes.push_back(Node::regular(xs[i], rational(), rational()));
        }
        return InterpolationData(std::move(nodes));
    }

    // Random invertible system of order n (retries until P is invertible).
    PickSystem invertible_system(std::size_t n) {
        for (;;) {
            PickSystem s = build_system(data(n));
            if (!s.singular()) return s;
        }
    }

    // Hermitian matrix with entries from complex_rational.
    Matrix hermitian(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = integer(0, 3) == 0 ? Scalar(0) : rational();
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = integer(0, 3) == 0 ? Scalar(0) : complex_rational();
                m(j, i) = m(i, j).conj();
            }
        }
        return m;
    }

    Matrix square(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = complex_rational();
        return m;
    }

    RationalFunction rational_function(int max_deg = 3) {
        auto poly = [&](bool monic_ok) {
            std::vector<Scalar> c;
            const long d = integer(0, max_deg);
            for (long k = 0; k <= d; ++k) c.push_back(rational());
            if (monic_ok && c.back().is_zero()) c.back() = Scalar(1);
            return Polynomial(c);
        };
        Polynomial den = poly(true);
        if (den.is_zero()) den = Polynomial::constant(1);
        return RationalFunction(poly(false), den);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Exact determinant by fraction Gaussian elimination.
inline Scalar determinant(Matrix m) {
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Scalar f = m(r, c) / m(c, c);
            if (f.is_zero()) continue;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

// Data with a singular Pick matrix: one gamma is tuned so that det P = 0.
// Returns false when the tuning is impossible for this draw.
inline bool singular_data(Gen& g, std::size_t n, InterpolationData& out) {
    const InterpolationData d = g.data(n);
    std::vector<Node> nodes = d.nodes();
    std::size_t idx = n;
    for (std::size_t i = 0; i < n; ++i)
        if (nodes[i].is_regular()) idx = i;
    if (idx == n) return false;
    nodes[idx].gamma = Scalar(0);
    const Matrix p0 = build_pick(nodes).matrix();
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != idx) rest.push_back(i);
    const Scalar minor = rest.empty() ? Scalar(1) : determinant(p0.select(rest, rest));
    if (minor.is_zero()) return false;
    nodes[idx].gamma = -determinant(p0) / minor;
    out = InterpolationData(nodes);
    return true;
}

}  // namespace nevpick::testing

#endif  // NEVPICK_TEST_SUPPORT_HPP
