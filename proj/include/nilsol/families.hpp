#pragma once

#include <cstddef>
#include <stdexcept>

#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace nilsol {

namespace detail {

inline void require_positive_parameter(const Rational& q) {
    if (sgn(q) <= 0) throw std::invalid_argument("family parameter q must be positive");
}

inline LieAlgebra::BracketMap base_table(int m, const Rational& q) {
    LieAlgebra::BracketMap t;
    if (m == 8) {
        t[{2, 3, 4}] = rat_pow(q, -1);
        t[{1, 3, 5}] = q;
        t[{1, 2, 6}] = 1;
        t[{2, 6, 7}] = q;
        t[{3, 4, 7}] = rat_pow(q, -1);
        t[{1, 6, 8}] = rat_pow(q, -1);
        t[{2, 4, 8}] = 1;
        t[{3, 5, 8}] = q;
    } else if (m == 9) {
        t[{2, 3, 4}] = rat_pow(q, 4);
        t[{1, 3, 5}] = rat_pow(q, -3);
        t[{1, 2, 6}] = rat_pow(q, -1);
        t[{2, 6, 7}] = rat_pow(q, -4);
        t[{3, 4, 7}] = rat_pow(q, 4);
        t[{1, 6, 8}] = rat_pow(q, 4);
        t[{2, 4, 8}] = 1;
        t[{3, 5, 8}] = rat_pow(q, -4);
        t[{3, 6, 9}] = rat_pow(q, -1);
        t[{2, 5, 9}] = q;
    } else {
        throw std::invalid_argument("base family dimension must be 8 or 9");
    }
    return t;
}

}  // namespace detail

/// One-parameter family of 3-step nilpotent algebras in dimension 8,
/// defined for every positive rational q.
inline LieAlgebra family_dim8(const Rational& q) {
    detail::require_positive_parameter(q);
    return LieAlgebra(8, detail::base_table(8, q));
}

/// One-parameter family in dimension 9 extending the 8-dimensional one by a
/// further center component.
inline LieAlgebra family_dim9(const Rational& q) {
    detail::require_positive_parameter(q);
    return LieAlgebra(9, detail::base_table(9, q));
}

/// Central extension of the dimension-m family by k pairwise-bracketing
/// central pairs. Basis order: x_1..x_m then y_1..y_{2k}, with
/// [y_i, y_{2k+1-i}] = x_m for i = 1..k.
struct ExtendedFamily {
    LieAlgebra algebra;
    Grading grading;       // weights 2,4,6 on the x-layers, 3 on every y
    RatMatrix derivation;  // diag(grading), a derivation by construction
    Rational lambda;       // trace D / trace D^2 for that derivation
};

inline ExtendedFamily family_extended(int m, int k, const Rational& q) {
    if (m != 8 && m != 9) throw std::invalid_argument("extension base must be 8 or 9");
    if (k < 0) throw std::invalid_argument("extension count k must be nonnegative");
    detail::require_positive_parameter(q);

    auto table = detail::base_table(m, q);
    int n = m + 2 * k;
    for (int i = 1; i <= k; ++i) table[{m + i, m + 2 * k + 1 - i, m}] = 1;

    std::vector<long> weights(n);
    for (int i = 1; i <= n; ++i) {
        if (i <= 3)
            weights[i - 1] = 2;
        else if (i <= 6)
            weights[i - 1] = 4;
        else if (i <= m)
            weights[i - 1] = 6;
        else
            weights[i - 1] = 3;
    }

    ExtendedFamily fam{LieAlgebra(n, std::move(table)), Grading{weights},
                       RatMatrix(n, n), Rational()};
    for (int i = 0; i < n; ++i) fam.derivation(i, i) = weights[i];
    fam.lambda = rat(m + k - 3, 6 * m + 3 * k - 26);
    return fam;
}

/// Heisenberg algebra of dimension 2k+1 together with its trace-normalized
/// diagonal derivation.
struct HeisenbergData {
    LieAlgebra algebra;
    RatMatrix nikolayevsky;  // diag((k+1)/(k+2),...,2(k+1)/(k+2))
};

inline HeisenbergData heisenberg(int k) {
    if (k < 1) throw std::invalid_argument("heisenberg index k must be positive");
    int n = 2 * k + 1;
    LieAlgebra::BracketMap t;
    for (int i = 1; i <= k; ++i) t[{i, n - i, n}] = 1;
    HeisenbergData h{LieAlgebra(n, std::move(t)), RatMatrix(n, n)};
    Rational gen = rat(k + 1, k + 2);
    for (int i = 0; i < n - 1; ++i) h.nikolayevsky(i, i) = gen;
    h.nikolayevsky(n - 1, n - 1) = 2 * gen;
    return h;
}

}  // namespace nilsol
