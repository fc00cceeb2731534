#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"

namespace nilsol {

/// 1-based basis indices with i < j; [x_i, x_j] has coefficient c on x_k.
struct BracketTriple {
    int i = 0, j = 0, k = 0;
    friend auto operator<=>(const BracketTriple&, const BracketTriple&) = default;
};

inline std::string triple_str(const BracketTriple& t) {
    return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
           std::to_string(t.k) + ")";
}

struct JacobiDefect {
    int i = 0, j = 0, k = 0;  // basis triple with nonzero cyclic sum
    RatVec defect;
};

class JacobiError : public std::runtime_error {
  public:
    explicit JacobiError(std::vector<JacobiDefect> defects)
        : std::runtime_error(describe(defects)), defects_(std::move(defects)) {}
    const std::vector<JacobiDefect>& defects() const { return defects_; }

  private:
    static std::string describe(const std::vector<JacobiDefect>& ds) {
        std::ostringstream out;
        out << "Jacobi identity fails on " << ds.size() << " basis triple(s):";
        for (const auto& d : ds)
            out << " (" << d.i << "," << d.j << "," << d.k << ") -> " << vec_str(d.defect);
        return out.str();
    }
    std::vector<JacobiDefect> defects_;
};

class NotNilpotentError : public std::runtime_error {
  public:
    NotNilpotentError() : std::runtime_error("lower central series does not reach zero") {}
};

/// Finite-dimensional rational Lie algebra given by structure constants on a
/// fixed basis. Construction validates the table shape and the Jacobi
/// identity; unvalidated() skips the Jacobi check so a broken table can still
/// be inspected with jacobi_check().
class LieAlgebra {
  public:
    using BracketMap = std::map<BracketTriple, Rational>;

    LieAlgebra(std::size_t dim, BracketMap table) : LieAlgebra(dim, std::move(table), true) {}

    static LieAlgebra unvalidated(std::size_t dim, BracketMap table) {
        return LieAlgebra(dim, std::move(table), false);
    }

    std::size_t dim() const { return dim_; }
    const BracketMap& brackets() const { return table_; }
    bool is_abelian() const { return table_.empty(); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

    /// c_{ij}^k with the skew pairs filled in; zero off the table.
    Rational structure_constant(int i, int j, int k) const {
        if (i == j) return 0;
        if (i < j) {
            auto it = table_.find({i, j, k});
            return it == table_.end() ? Rational(0) : it->second;
        }
        auto it = table_.find({j, i, k});
        return it == table_.end() ? Rational(0) : Rational(-it->second);
    }

    RatVec bracket(const RatVec& x, const RatVec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket operand size mismatch");
        RatVec r(dim_);
        for (const auto& [t, c] : table_) {
            Rational m = x[t.i - 1] * y[t.j - 1] - x[t.j - 1] * y[t.i - 1];
            if (sgn(m) != 0) r[t.k - 1] += c * m;
        }
        return r;
    }

    RatVec basis_vector(int i) const {
        if (i < 1 || static_cast<std::size_t>(i) > dim_)
            throw std::out_of_range("basis index");
        RatVec e(dim_);
        e[i - 1] = 1;
        return e;
    }

    /// [x_i, x_j] as a coordinate vector, 1-based indices.
    RatVec bracket_basis(int i, int j) const {
        RatVec r(dim_);
        for (int k = 1; k <= static_cast<int>(dim_); ++k) {
            Rational c = structure_constant(i, j, k);
            if (sgn(c) != 0) r[k - 1] = c;
        }
        return r;
    }

  private:
    LieAlgebra(std::size_t dim, BracketMap table, bool check_jacobi)
        : dim_(dim), table_(std::move(table)) {
        if (dim_ == 0) throw std::invalid_argument("zero-dimensional algebra");
        int n = static_cast<int>(dim_);
        for (const auto& [t, c] : table_) {
            if (t.i < 1 || t.j <= t.i || t.j > n)
                throw std::invalid_argument("bracket triple " + triple_str(t) +
                                            " violates 1 <= i < j <= dim");
            if (t.k < 1 || t.k > n)
                throw std::invalid_argument("bracket triple " + triple_str(t) +
                                            " has target out of range");
            if (sgn(c) == 0)
                throw std::invalid_argument("bracket triple " + triple_str(t) +
                                            " carries a zero coefficient");
        }
        if (check_jacobi) {
            auto defects = jacobi_defects();
            if (!defects.empty()) throw JacobiError(std::move(defects));
        }
    }

    std::vector<JacobiDefect> jacobi_defects() const;

    std::size_t dim_;
    BracketMap table_;

    friend std::vector<JacobiDefect> jacobi_check(const LieAlgebra&);
};

/// All basis triples i < j < k whose Jacobi cyclic sum is nonzero.
inline std::vector<JacobiDefect> jacobi_check(const LieAlgebra& g) {
    return g.jacobi_defects();
}

inline std::vector<JacobiDefect> LieAlgebra::jacobi_defects() const {
    std::vector<JacobiDefect> out;
    int n = static_cast<int>(dim_);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                RatVec d = bracket(bracket_basis(i, j), basis_vector(k));
                RatVec d2 = bracket(bracket_basis(j, k), basis_vector(i));
                RatVec d3 = bracket(bracket_basis(k, i), basis_vector(j));
                for (std::size_t c = 0; c < dim_; ++c) d[c] += d2[c] + d3[c];
                if (!vec_is_zero(d)) out.push_back({i, j, k, std::move(d)});
            }
    return out;
}

inline Subspace commutator_ideal(const LieAlgebra& g) {
    std::vector<RatVec> gens;
    for (const auto& [t, c] : g.brackets()) (void)c, gens.push_back(g.bracket_basis(t.i, t.j));
    return Subspace::span(g.dim(), gens);
}

/// Terms of the lower central series g = g^1 >= g^2 >= ... down to the first
/// repeated or zero term. Nilpotent iff the last term is zero.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    std::vector<Subspace> series;
    series.push_back(Subspace::full(g.dim()));
    for (;;) {
        const Subspace& cur = series.back();
        if (cur.dim() == 0) break;
        std::vector<RatVec> gens;
        for (int i = 1; i <= static_cast<int>(g.dim()); ++i)
            for (const auto& w : cur.basis()) {
                RatVec v = g.bracket(g.basis_vector(i), w);
                if (!vec_is_zero(v)) gens.push_back(std::move(v));
            }
        Subspace next = Subspace::span(g.dim(), gens);
        if (next.dim() == cur.dim()) break;  // stabilized without reaching zero
        series.push_back(std::move(next));
    }
    return series;
}

/// Dimension drops along the lower central series, e.g. (3,3,2) in dim 8.
inline std::vector<std::size_t> nilpotency_type(const LieAlgebra& g) {
    auto series = lower_central_series(g);
    if (series.back().dim() != 0) throw NotNilpotentError();
    std::vector<std::size_t> type;
    for (std::size_t s = 0; s + 1 < series.size(); ++s)
        type.push_back(series[s].dim() - series[s + 1].dim());
    return type;
}

inline std::size_t nilpotency_step(const LieAlgebra& g) { return nilpotency_type(g).size(); }

/// Positive integer weights per basis vector; a grading when every bracket
/// adds weights.
struct Grading {
    std::vector<long> weights;  // weights[i-1] for basis vector x_i
};

inline bool verify_grading(const LieAlgebra& g, const Grading& grading) {
    if (grading.weights.size() != g.dim()) return false;
    for (long w : grading.weights)
        if (w <= 0) return false;
    for (const auto& [t, c] : g.brackets()) {
        (void)c;
        if (grading.weights[t.i - 1] + grading.weights[t.j - 1] != grading.weights[t.k - 1])
            return false;
    }
    return true;
}

/// Matrix of ad_x = [x, .] in the fixed basis; column j holds [x, x_j].
inline RatMatrix ad_matrix(const LieAlgebra& g, const RatVec& x) {
    RatMatrix m(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        RatVec col = g.bracket(x, g.basis_vector(static_cast<int>(j) + 1));
        for (std::size_t i = 0; i < g.dim(); ++i) m(i, j) = std::move(col[i]);
    }
    return m;
}

inline std::size_t ad_rank(const LieAlgebra& g, const RatVec& x) {
    return rank(ad_matrix(g, x));
}

/// Elements commuting with every vector of w.
inline Subspace centralizer(const LieAlgebra& g, const Subspace& w) {
    if (w.ambient_dim() != g.dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::size_t n = g.dim();
    // x in the centralizer iff for every generator w_r the vector [x, w_r]
    // vanishes; each coordinate gives one linear condition on x.
    RatMatrix cond(n * w.basis().size(), n);
    std::size_t r = 0;
    for (const auto& wb : w.basis()) {
        for (std::size_t col = 0; col < n; ++col) {
            RatVec v = g.bracket(g.basis_vector(static_cast<int>(col) + 1), wb);
            for (std::size_t row = 0; row < n; ++row) cond(r + row, col) = std::move(v[row]);
        }
        r += n;
    }
    return Subspace::span(n, nullspace(cond));
}

inline Subspace center(const LieAlgebra& g) {
    return centralizer(g, Subspace::full(g.dim()));
}

}  // namespace nilsol
