#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace nilsol {

/// Incremental Gaussian elimination over the rationals. Rows are inserted one
/// at a time and kept in echelon form keyed by pivot column; full reduction
/// is deferred to reduce_fully(). Cheap for the large sparse systems produced
/// by derivation computations.
class RowReducer {
  public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces the row against the current pivots and inserts the remainder.
    /// Returns true when the rank grew.
    bool add_row(RatVec row) {
        if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
        for (const auto& [p, pivot_row] : rows_) {
            if (sgn(row[p]) == 0) continue;
            Rational f = row[p];
            // pivot_row has leading 1 at p and zeros before it
            for (std::size_t c = p; c < cols_; ++c)
                if (sgn(pivot_row[c]) != 0) row[c] -= f * pivot_row[c];
        }
        std::size_t lead = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(row[c]) != 0) {
                lead = c;
                break;
            }
        if (lead == cols_) return false;
        if (row[lead] != 1) {
            Rational inv = Rational(1) / row[lead];
            for (std::size_t c = lead; c < cols_; ++c)
                if (sgn(row[c]) != 0) row[c] *= inv;
        }
        fully_reduced_ = false;
        rows_.emplace(lead, std::move(row));
        return true;
    }

    /// Upward elimination: afterwards every pivot column is zero in all other
    /// rows, i.e. the stored rows form the reduced row-echelon basis.
    void reduce_fully() {
        if (fully_reduced_) return;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            std::size_t p = it->first;
            const RatVec& src = it->second;
            for (auto& [q, row] : rows_) {
                if (q >= p) break;
                if (sgn(row[p]) == 0) continue;
                Rational f = row[p];
                for (std::size_t c = p; c < cols_; ++c)
                    if (sgn(src[c]) != 0) row[c] -= f * src[c];
            }
        }
        fully_reduced_ = true;
    }

    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> p;
        p.reserve(rows_.size());
        for (const auto& [col, row] : rows_) p.push_back(col);
        return p;
    }

    bool has_pivot(std::size_t col) const { return rows_.count(col) != 0; }

    /// Reduced rows in pivot order.
    std::vector<RatVec> reduced_rows() {
        reduce_fully();
        std::vector<RatVec> out;
        out.reserve(rows_.size());
        for (const auto& [col, row] : rows_) out.push_back(row);
        return out;
    }

    /// Basis of the kernel of the row span, one vector per free column,
    /// ordered by free column index.
    std::vector<RatVec> nullspace_basis() {
        reduce_fully();
        std::vector<RatVec> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (rows_.count(f)) continue;
            RatVec v(cols_);
            v[f] = 1;
            for (const auto& [p, row] : rows_)
                if (sgn(row[f]) != 0) v[p] = -row[f];
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    std::size_t cols_;
    std::map<std::size_t, RatVec> rows_;
    bool fully_reduced_ = true;
};

struct RrefResult {
    RatMatrix matrix;                     // same shape as the input
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank() const { return pivot_cols.size(); }
};

inline RrefResult rref(const RatMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) red.add_row(a.row(i));
    RrefResult res;
    res.pivot_cols = red.pivot_columns();
    res.matrix = RatMatrix(a.rows(), a.cols());
    auto rows = red.reduced_rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) res.matrix(i, j) = rows[i][j];
    return res;
}

inline std::vector<RatVec> nullspace(const RatMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) red.add_row(a.row(i));
    return red.nullspace_basis();
}

inline std::size_t rank(const RatMatrix& a) {
    RowReducer red(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) red.add_row(a.row(i));
    return red.rank();
}

/// Solution set of A x = b: empty, or particular + span(nullspace_basis).
/// The particular solution sets every free variable to zero.
struct AffineSolutionSet {
    bool consistent = false;
    RatVec particular;
    std::vector<RatVec> nullspace_basis;

    std::size_t degrees_of_freedom() const { return nullspace_basis.size(); }

    bool contains(const RatVec& x) const {
        if (!consistent || x.size() != particular.size()) return false;
        RatVec d = vec_sub(x, particular);
        RowReducer red(d.size());
        for (const auto& v : nullspace_basis) red.add_row(v);
        return !red.add_row(d);
    }

    /// Coordinates (0-based) that vanish on the whole solution set.
    std::vector<std::size_t> forced_zero_coordinates() const {
        std::vector<std::size_t> out;
        if (!consistent) return out;
        for (std::size_t c = 0; c < particular.size(); ++c) {
            if (sgn(particular[c]) != 0) continue;
            bool zero = true;
            for (const auto& v : nullspace_basis)
                if (sgn(v[c]) != 0) {
                    zero = false;
                    break;
                }
            if (zero) out.push_back(c);
        }
        return out;
    }
};

inline AffineSolutionSet solve_affine(const RatMatrix& a, const RatVec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_affine shape mismatch");
    std::size_t n = a.cols();
    RowReducer red(n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        RatVec row = a.row(i);
        row.push_back(b[i]);
        red.add_row(std::move(row));
    }
    AffineSolutionSet sol;
    if (red.has_pivot(n)) return sol;  // a pivot in the b column: inconsistent
    sol.consistent = true;
    sol.particular.assign(n, Rational(0));
    auto rows = red.reduced_rows();
    auto pivots = red.pivot_columns();
    for (std::size_t r = 0; r < rows.size(); ++r) sol.particular[pivots[r]] = rows[r][n];
    for (std::size_t f = 0; f < n; ++f) {
        if (red.has_pivot(f)) continue;
        RatVec v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (sgn(rows[r][f]) != 0) v[pivots[r]] = -rows[r][f];
        sol.nullspace_basis.push_back(std::move(v));
    }
    return sol;
}

/// Linear subspace of Q^n stored as the reduced row-echelon basis of its
/// span, which makes equality a plain comparison.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<RatVec>& vectors) {
        Subspace s(ambient);
        RowReducer red(ambient);
        for (const auto& v : vectors) red.add_row(v);
        s.basis_ = red.reduced_rows();
        s.pivots_ = red.pivot_columns();
        return s;
    }

    static Subspace full(std::size_t ambient) {
        std::vector<RatVec> rows;
        for (std::size_t i = 0; i < ambient; ++i) {
            RatVec e(ambient);
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        return span(ambient, rows);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RatVec>& basis() const { return basis_; }

    bool contains(const RatVec& v) const {
        if (v.size() != ambient_) return false;
        RatVec r = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t p = pivots_[i];
            if (sgn(r[p]) == 0) continue;
            Rational f = r[p];
            for (std::size_t c = p; c < ambient_; ++c)
                if (sgn(basis_[i][c]) != 0) r[c] -= f * basis_[i][c];
        }
        return vec_is_zero(r);
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    std::size_t ambient_;
    std::vector<RatVec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Set equality of two affine solution sets.
inline bool same_affine_set(const AffineSolutionSet& a, const AffineSolutionSet& b) {
    if (!a.consistent || !b.consistent) return a.consistent == b.consistent;
    if (a.particular.size() != b.particular.size()) return false;
    std::size_t n = a.particular.size();
    if (Subspace::span(n, a.nullspace_basis) != Subspace::span(n, b.nullspace_basis))
        return false;
    return a.contains(b.particular);
}

}  // namespace nilsol
