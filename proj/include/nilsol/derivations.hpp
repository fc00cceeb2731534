#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"

namespace nilsol {

/// Basis of the derivation algebra Der(g) as matrices acting on the fixed
/// basis, D x_s = sum_r D(r,s) x_r.
struct DerivationBasis {
    std::size_t algebra_dim = 0;
    std::vector<RatMatrix> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Leibniz condition D[x_i,x_j] = [D x_i, x_j] + [x_i, D x_j] on all basis
/// pairs, one linear equation per pair and target coordinate. The kernel is
/// computed by incremental elimination; at dimension n there are
/// n^2 (n-1)/2 equations in n^2 unknowns.
inline DerivationBasis derivation_algebra(const LieAlgebra& g) {
    int n = static_cast<int>(g.dim());
    auto idx = [n](int r, int s) { return static_cast<std::size_t>((r - 1) * n + (s - 1)); };
    RowReducer red(static_cast<std::size_t>(n) * n);
    RatVec row(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l) {
                bool nonzero = false;
                for (int k = 1; k <= n; ++k) {
                    Rational c = g.structure_constant(i, j, k);
                    if (sgn(c) != 0) {
                        row[idx(l, k)] += c;
                        nonzero = true;
                    }
                }
                for (int r = 1; r <= n; ++r) {
                    Rational c1 = g.structure_constant(r, j, l);
                    if (sgn(c1) != 0) {
                        row[idx(r, i)] -= c1;
                        nonzero = true;
                    }
                    Rational c2 = g.structure_constant(i, r, l);
                    if (sgn(c2) != 0) {
                        row[idx(r, j)] -= c2;
                        nonzero = true;
                    }
                }
                if (nonzero) {
                    red.add_row(row);
                    for (auto& x : row) x = 0;
                }
            }
    DerivationBasis der;
    der.algebra_dim = g.dim();
    for (auto& v : red.nullspace_basis()) {
        RatMatrix m(g.dim(), g.dim());
        for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) m(r - 1, s - 1) = std::move(v[idx(r, s)]);
        der.basis.push_back(std::move(m));
    }
    return der;
}

inline bool is_derivation(const LieAlgebra& g, const RatMatrix& d) {
    if (d.rows() != g.dim() || d.cols() != g.dim())
        throw std::invalid_argument("derivation candidate has wrong shape");
    int n = static_cast<int>(g.dim());
    std::vector<RatVec> image(n);  // D x_j
    for (int j = 0; j < n; ++j) {
        RatVec col(g.dim());
        for (int r = 0; r < n; ++r) col[r] = d(r, j);
        image[j] = std::move(col);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RatVec lhs = d * g.bracket_basis(i, j);
            RatVec rhs = g.bracket(image[i - 1], g.basis_vector(j));
            RatVec rhs2 = g.bracket(g.basis_vector(i), image[j - 1]);
            for (std::size_t c = 0; c < g.dim(); ++c) rhs[c] += rhs2[c];
            if (lhs != rhs) return false;
        }
    return true;
}

/// Diagonal derivations as weight vectors: diag(w) is a derivation iff
/// w_i + w_j = w_k over the bracket support. Returns a basis of that space.
inline std::vector<RatVec> diagonal_derivations(const LieAlgebra& g) {
    RowReducer red(g.dim());
    for (const auto& [t, c] : g.brackets()) {
        (void)c;
        RatVec row(g.dim());
        row[t.i - 1] += 1;
        row[t.j - 1] += 1;
        row[t.k - 1] -= 1;
        red.add_row(std::move(row));
    }
    return red.nullspace_basis();
}

/// trace(D F) = trace(F) for every derivation F of g.
inline bool verify_pre_einstein(const LieAlgebra& g, const RatMatrix& d,
                                const DerivationBasis& der) {
    if (d.rows() != g.dim() || d.cols() != g.dim())
        throw std::invalid_argument("candidate has wrong shape");
    for (const auto& f : der.basis) {
        Rational lhs;
        for (std::size_t r = 0; r < g.dim(); ++r)
            for (std::size_t s = 0; s < g.dim(); ++s)
                if (sgn(d(r, s)) != 0 && sgn(f(s, r)) != 0) lhs += d(r, s) * f(s, r);
        if (lhs != f.trace()) return false;
    }
    return true;
}

inline bool verify_pre_einstein(const LieAlgebra& g, const RatMatrix& d) {
    return verify_pre_einstein(g, d, derivation_algebra(g));
}

/// Trace normalization (trace D / trace D^2) D of a nonzero diagonal
/// derivation D.
inline RatMatrix nikolayevsky_rank_one(const LieAlgebra& g, const RatMatrix& d) {
    if (d.rows() != g.dim() || d.cols() != g.dim())
        throw std::invalid_argument("derivation has wrong shape");
    if (!d.is_diagonal()) throw std::invalid_argument("derivation must be diagonal");
    if (d.is_zero()) throw std::invalid_argument("derivation must be nonzero");
    if (!is_derivation(g, d)) throw std::invalid_argument("matrix is not a derivation");
    Rational tr = d.trace();
    Rational tr2 = (d * d).trace();
    if (sgn(tr2) == 0) throw std::invalid_argument("trace of D^2 vanishes");
    return d.scaled(tr / tr2);
}

/// Diagonal solution of the trace conditions trace(D F) = trace(F), if the
/// restriction of the problem to the diagonal torus is solvable.
inline std::optional<RatMatrix> pre_einstein_diagonal(const LieAlgebra& g,
                                                      const DerivationBasis& der) {
    auto torus = diagonal_derivations(g);
    if (torus.empty()) return std::nullopt;
    RatMatrix m(der.dim(), torus.size());
    RatVec rhs(der.dim());
    for (std::size_t f = 0; f < der.dim(); ++f) {
        for (std::size_t l = 0; l < torus.size(); ++l) {
            Rational v;
            for (std::size_t a = 0; a < g.dim(); ++a)
                if (sgn(torus[l][a]) != 0 && sgn(der.basis[f](a, a)) != 0)
                    v += torus[l][a] * der.basis[f](a, a);
            m(f, l) = std::move(v);
        }
        rhs[f] = der.basis[f].trace();
    }
    auto sol = solve_affine(m, rhs);
    if (!sol.consistent) return std::nullopt;
    RatVec diag(g.dim());
    for (std::size_t l = 0; l < torus.size(); ++l)
        vec_axpy(diag, sol.particular[l], torus[l]);
    return RatMatrix::diagonal(diag);
}

inline std::optional<RatMatrix> pre_einstein_diagonal(const LieAlgebra& g) {
    return pre_einstein_diagonal(g, derivation_algebra(g));
}

}  // namespace nilsol
