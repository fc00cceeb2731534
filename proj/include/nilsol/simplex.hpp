#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"

namespace nilsol {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective;
    RatVec x;
    long iterations = 0;
};

/// Two-phase primal simplex in exact arithmetic for
///   max c.x  subject to  A x = b, x >= 0.
/// Bland's rule (smallest eligible index, ties by smallest basis index)
/// guarantees termination; the iteration limit is a hard failure, not a
/// convergence knob.
class Simplex {
  public:
    Simplex(const RatMatrix& a, const RatVec& b, const RatVec& c, long limit)
        : n_(a.cols()), m_(a.rows()), limit_(limit), cost_(c) {
        if (b.size() != m_) throw std::invalid_argument("simplex: b size mismatch");
        if (c.size() != n_) throw std::invalid_argument("simplex: c size mismatch");
        total_ = n_ + m_;
        tableau_.assign(m_, RatVec(total_ + 1));
        basis_.resize(m_);
        banned_.assign(total_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < n_; ++j)
                tableau_[i][j] = flip ? Rational(-a(i, j)) : a(i, j);
            tableau_[i][total_] = flip ? Rational(-b[i]) : b[i];
            tableau_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    LpSolution run() {
        LpSolution sol;
        if (!phase_one()) {
            sol.status = LpStatus::infeasible;
            sol.iterations = iterations_;
            return sol;
        }
        if (!phase_two()) {
            sol.status = LpStatus::unbounded;
            sol.iterations = iterations_;
            return sol;
        }
        sol.status = LpStatus::optimal;
        sol.objective = objval_;
        sol.x.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) sol.x[basis_[i]] = tableau_[i][total_];
        sol.iterations = iterations_;
        return sol;
    }

  private:
    // phase 1 objective: max -(sum of artificials)
    bool phase_one() {
        redcost_.assign(total_, Rational(0));
        objval_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(tableau_[i][j]) != 0) redcost_[j] += tableau_[i][j];
            objval_ -= tableau_[i][total_];
        }
        if (!iterate(total_))
            throw std::logic_error("phase 1 objective is bounded");
        return sgn(objval_) == 0 && evict_artificials();
    }

    bool phase_two() {
        redcost_.assign(total_, Rational(0));
        objval_ = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            Rational z;
            for (std::size_t i = 0; i < m_; ++i)
                if (sgn(cost_[basis_[i]]) != 0 && sgn(tableau_[i][j]) != 0)
                    z += cost_[basis_[i]] * tableau_[i][j];
            redcost_[j] = cost_[j] - z;
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (sgn(cost_[basis_[i]]) != 0)
                objval_ += cost_[basis_[i]] * tableau_[i][total_];
        return iterate(n_);
    }

    /// Bland pivoting over columns [0, cols). Returns false on unboundedness.
    bool iterate(std::size_t cols) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (!banned_[j] && sgn(redcost_[j]) > 0) {
                    enter = j;
                    break;
                }
            if (enter == cols) return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(tableau_[i][enter]) <= 0) continue;
                Rational ratio = tableau_[i][total_] / tableau_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t jcol) {
        if (++iterations_ > limit_)
            throw std::runtime_error("simplex iteration limit exceeded");
        RatVec& prow = tableau_[r];
        if (prow[jcol] != 1) {
            Rational inv = Rational(1) / prow[jcol];
            for (auto& x : prow)
                if (sgn(x) != 0) x *= inv;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(tableau_[i][jcol]) == 0) continue;
            Rational f = tableau_[i][jcol];
            for (std::size_t c = 0; c <= total_; ++c)
                if (sgn(prow[c]) != 0) tableau_[i][c] -= f * prow[c];
        }
        if (sgn(redcost_[jcol]) != 0) {
            Rational f = redcost_[jcol];
            for (std::size_t c = 0; c < total_; ++c)
                if (sgn(prow[c]) != 0) redcost_[c] -= f * prow[c];
            objval_ += f * prow[total_];
        }
        std::size_t old = basis_[r];
        if (old >= n_) banned_[old] = true;  // artificials never come back
        basis_[r] = jcol;
    }

    /// After a feasible phase 1, pivot remaining artificials out of the
    /// basis; rows that cannot be pivoted are redundant and get dropped.
    bool evict_artificials() {
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t j = n_;
            for (std::size_t c = 0; c < n_; ++c)
                if (sgn(tableau_[i][c]) != 0) {
                    j = c;
                    break;
                }
            if (j < n_) {
                pivot(i, j);
                ++i;
            } else {
                if (i + 1 != m_) {
                    tableau_[i] = std::move(tableau_.back());
                    basis_[i] = basis_.back();
                }
                tableau_.pop_back();
                basis_.pop_back();
                --m_;
            }
        }
        return true;
    }

    std::size_t n_, m_, total_;
    long limit_;
    RatVec cost_;
    std::vector<RatVec> tableau_;
    std::vector<std::size_t> basis_;
    std::vector<bool> banned_;
    RatVec redcost_;
    Rational objval_;
    long iterations_ = 0;
};

inline LpSolution simplex_maximize(const RatMatrix& a, const RatVec& b, const RatVec& c,
                                   long iteration_limit = 1000000) {
    return Simplex(a, b, c, iteration_limit).run();
}

/// Outcome of the strict-positivity feasibility question for A x = b.
struct PositivityResult {
    bool system_consistent = false;
    std::optional<Rational> t_star;  // max over solutions of min component, capped at 1
    std::optional<RatVec> witness;   // present iff t_star > 0
    long iterations = 0;
};

/// Decides whether A x = b has a solution with every component strictly
/// positive. Solved as the exact LP
///   max t  s.t.  x = w + t*1, w >= 0, t <= 1
/// with t split into a difference of nonnegatives; consistency of the system
/// is equivalent to LP feasibility, and a positive solution exists iff the
/// optimum t* is positive.
inline PositivityResult positivity(const RatMatrix& a, const RatVec& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("positivity: shape mismatch");
    std::size_t n = a.cols(), m = a.rows();
    RatMatrix lp(m + 1, n + 3);
    RatVec rhs(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Rational rowsum;
        for (std::size_t j = 0; j < n; ++j) {
            lp(i, j) = a(i, j);
            rowsum += a(i, j);
        }
        lp(i, n) = rowsum;
        lp(i, n + 1) = -rowsum;
        rhs[i] = b[i];
    }
    lp(m, n) = 1;
    lp(m, n + 1) = -1;
    lp(m, n + 2) = 1;
    rhs[m] = 1;
    RatVec cost(n + 3);
    cost[n] = 1;
    cost[n + 1] = -1;

    LpSolution sol = simplex_maximize(lp, rhs, cost);
    PositivityResult res;
    res.iterations = sol.iterations;
    if (sol.status == LpStatus::infeasible) return res;
    if (sol.status != LpStatus::optimal)
        throw std::logic_error("positivity LP cannot be unbounded");
    res.system_consistent = true;
    res.t_star = sol.objective;
    if (sgn(sol.objective) > 0) {
        RatVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = sol.x[j] + sol.objective;
        res.witness = v;
    }
    return res;
}

/// Strictly positive solution of A x = b, if one exists.
inline std::optional<RatVec> positive_solution(const RatMatrix& a, const RatVec& b) {
    return positivity(a, b).witness;
}

}  // namespace nilsol
