#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "families.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "simplex.hpp"

namespace nilsol {

class EmptyIndexSetError : public std::runtime_error {
  public:
    EmptyIndexSetError()
        : std::runtime_error("abelian algebra has an empty bracket index set") {}
};

/// Bracket support ordered by target k, then i, then j.
inline std::vector<BracketTriple> index_set(const LieAlgebra& g) {
    if (g.is_abelian()) throw EmptyIndexSetError();
    std::vector<BracketTriple> triples;
    triples.reserve(g.brackets().size());
    for (const auto& [t, c] : g.brackets()) (void)c, triples.push_back(t);
    std::sort(triples.begin(), triples.end(), [](const BracketTriple& a, const BracketTriple& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return triples;
}

/// Root vector e_i + e_j - e_k of a bracket triple, summed literally when
/// indices coincide.
inline RatVec root_vector(std::size_t dim, const BracketTriple& t) {
    RatVec v(dim);
    v[t.i - 1] += 1;
    v[t.j - 1] += 1;
    v[t.k - 1] -= 1;
    return v;
}

/// Gram matrix of the root vectors over the ordered index set. Depends only
/// on the bracket support, not on the structure constant values.
inline RatMatrix gram_matrix(const LieAlgebra& g) {
    auto triples = index_set(g);
    std::vector<RatVec> roots;
    roots.reserve(triples.size());
    for (const auto& t : triples) roots.push_back(root_vector(g.dim(), t));
    RatMatrix u(roots.size(), roots.size());
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a; b < roots.size(); ++b) {
            u(a, b) = dot(roots[a], roots[b]);
            if (a != b) u(b, a) = u(a, b);
        }
    return u;
}

/// A basis is nice here when no Gram entry equals 2; the decision procedure
/// below is only valid in that case.
inline bool is_nice(const LieAlgebra& g) {
    auto u = gram_matrix(g);
    for (std::size_t a = 0; a < u.rows(); ++a)
        for (std::size_t b = 0; b < u.cols(); ++b)
            if (u(a, b) == 2) return false;
    return true;
}

struct NonsolitonEvidence {
    AffineSolutionSet solutions;      // solution set of U v = 1
    std::optional<Rational> t_star;   // LP optimum; absent when inconsistent
};

struct SolitonVerdict {
    enum class Tag { soliton, nonsoliton, inapplicable };
    Tag tag = Tag::inapplicable;
    std::optional<RatVec> witness;               // soliton only: positive v with U v = 1
    std::optional<NonsolitonEvidence> evidence;  // nonsoliton only
    std::string reason;                          // inapplicable only

    bool is_soliton() const { return tag == Tag::soliton; }
    bool is_nonsoliton() const { return tag == Tag::nonsoliton; }
    bool is_inapplicable() const { return tag == Tag::inapplicable; }
};

/// Decides soliton existence for a nonabelian nilpotent algebra whose Gram
/// matrix avoids the entry 2: soliton iff U v = 1 admits a strictly positive
/// solution. Abelian input and Gram entries equal to 2 are out of scope and
/// reported as inapplicable.
inline SolitonVerdict soliton_test(const LieAlgebra& g) {
    SolitonVerdict verdict;
    if (g.is_abelian()) {
        verdict.reason = "abelian algebra";
        return verdict;
    }
    auto u = gram_matrix(g);
    if (!is_nice(g)) {
        verdict.reason = "Gram matrix has an entry equal to 2";
        return verdict;
    }
    RatVec ones(u.rows(), Rational(1));
    auto pos = positivity(u, ones);
    if (pos.witness) {
        verdict.tag = SolitonVerdict::Tag::soliton;
        verdict.witness = std::move(pos.witness);
        return verdict;
    }
    verdict.tag = SolitonVerdict::Tag::nonsoliton;
    NonsolitonEvidence ev;
    ev.solutions = solve_affine(u, ones);
    ev.t_star = pos.t_star;
    verdict.evidence = std::move(ev);
    return verdict;
}

/// Solution of U8 v = (1,1,1,1,1,a,a,a), normalized to vanish on the last
/// triple. The kernel of U8 vanishes at the (2,4,8) slot, so every solution
/// carries the value (a-1)/3 there; that value is negative for a in (0,1),
/// which blocks positive solutions for the extensions of the 8-dimensional
/// family.
inline RatVec nonsoliton_certificate_dim8_extension(int k, const Rational& a) {
    if (k < 1) throw std::invalid_argument("extension count k must be at least 1");
    if (sgn(a) <= 0 || a >= 1) throw std::invalid_argument("parameter a must lie in (0,1)");
    RatVec v(8);
    v[0] = (7 * a + 2) / 33;
    v[1] = (3 - 6 * a) / 33;
    v[2] = (13 - 4 * a) / 33;
    v[3] = (11 - 11 * a) / 33;
    v[4] = (2 * a + 10) / 33;
    v[5] = (13 * a - 1) / 33;
    v[6] = (11 * a - 11) / 33;
    v[7] = 0;
    auto u8 = gram_matrix(family_dim8(Rational(1)));
    RatVec rhs(8, Rational(1));
    rhs[5] = rhs[6] = rhs[7] = a;
    if (u8 * v != rhs)
        throw std::logic_error("certificate does not solve the Gram system");
    return v;
}

}  // namespace nilsol
