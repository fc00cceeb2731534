#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "derivations.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace nilsol {

/// Inner product diag(q) on the fixed basis, all entries strictly positive.
struct DiagonalMetric {
    RatVec q;

    explicit DiagonalMetric(RatVec entries) : q(std::move(entries)) {
        for (const auto& x : q)
            if (sgn(x) <= 0)
                throw std::invalid_argument("metric entries must be strictly positive");
    }

    static DiagonalMetric identity(std::size_t n) { return DiagonalMetric(RatVec(n, Rational(1))); }

    std::size_t dim() const { return q.size(); }
};

namespace detail {

/// Dense signed structure constant tensor, c[(i*n+j)*n+k] = c_{ij}^k, 0-based.
inline std::vector<Rational> dense_constants(const LieAlgebra& g) {
    std::size_t n = g.dim();
    std::vector<Rational> c(n * n * n);
    for (const auto& [t, v] : g.brackets()) {
        std::size_t i = t.i - 1, j = t.j - 1, k = t.k - 1;
        c[(i * n + j) * n + k] = v;
        c[(j * n + i) * n + k] = -v;
    }
    return c;
}

}  // namespace detail

/// Ricci form of the metric diag(q) as a bilinear form on the fixed basis:
///   R(a,b) = -1/2 sum_{i,k} c_{ai}^k c_{bi}^k q_k / q_i
///            +1/4 sum_{i,j} c_{ij}^a c_{ij}^b q_a q_b / (q_i q_j),
/// both sums over ordered pairs.
inline RatMatrix ricci_form(const LieAlgebra& g, const DiagonalMetric& metric) {
    std::size_t n = g.dim();
    if (metric.dim() != n) throw std::invalid_argument("metric dimension mismatch");
    auto c = detail::dense_constants(g);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
        return c[(i * n + j) * n + k];
    };
    const RatVec& q = metric.q;
    RatMatrix r(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Rational sum;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& ca = at(a, i, k);
                    if (sgn(ca) == 0) continue;
                    const Rational& cb = at(b, i, k);
                    if (sgn(cb) == 0) continue;
                    sum -= Rational(1, 2) * ca * cb * q[k] / q[i];
                }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Rational& ca = at(i, j, a);
                    if (sgn(ca) == 0) continue;
                    const Rational& cb = at(i, j, b);
                    if (sgn(cb) == 0) continue;
                    sum += Rational(1, 4) * ca * cb * q[a] * q[b] / (q[i] * q[j]);
                }
            r(a, b) = sum;
            if (a != b) r(b, a) = std::move(sum);
        }
    return r;
}

/// Ricci endomorphism Q^{-1} R; satisfies q_a Ric(a,b) = R(a,b).
inline RatMatrix ricci_endomorphism(const LieAlgebra& g, const DiagonalMetric& metric) {
    RatMatrix r = ricci_form(g, metric);
    for (std::size_t a = 0; a < r.rows(); ++a)
        for (std::size_t b = 0; b < r.cols(); ++b)
            if (sgn(r(a, b)) != 0) r(a, b) /= metric.q[a];
    return r;
}

/// The metric is a soliton iff Ric = beta I + D for a scalar beta and a
/// derivation D; decided exactly by solving for beta and derivation
/// coefficients. Returns (beta, D) on success.
inline std::optional<std::pair<Rational, RatMatrix>> soliton_metric_check(
    const LieAlgebra& g, const DiagonalMetric& metric) {
    std::size_t n = g.dim();
    auto der = derivation_algebra(g);
    RatMatrix ric = ricci_endomorphism(g, metric);
    RatMatrix sys(n * n, 1 + der.dim());
    RatVec rhs(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t row = a * n + b;
            if (a == b) sys(row, 0) = 1;
            for (std::size_t f = 0; f < der.dim(); ++f) sys(row, 1 + f) = der.basis[f](a, b);
            rhs[row] = ric(a, b);
        }
    auto sol = solve_affine(sys, rhs);
    if (!sol.consistent) return std::nullopt;
    Rational beta = sol.particular[0];
    RatMatrix d = ric - RatMatrix::identity(n).scaled(beta);
    return std::make_pair(std::move(beta), std::move(d));
}

}  // namespace nilsol
