#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "derivations.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "simplex.hpp"
#include "soliton.hpp"

namespace nilsol {

/// Positive integer weights w with w_i + w_j = w_k over the bracket support,
/// scaled to the smallest integer vector the solver's witness admits. Empty
/// when no positive grading exists.
inline std::optional<std::vector<long>> derive_grading(const LieAlgebra& g) {
    if (g.is_abelian()) return std::vector<long>(g.dim(), 1);
    auto triples = index_set(g);
    RatMatrix a(triples.size(), g.dim());
    for (std::size_t r = 0; r < triples.size(); ++r) {
        a(r, triples[r].i - 1) += 1;
        a(r, triples[r].j - 1) += 1;
        a(r, triples[r].k - 1) -= 1;
    }
    auto w = positive_solution(a, RatVec(triples.size()));
    if (!w) return std::nullopt;
    mpz_class lcm = 1;
    for (const auto& x : *w) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    mpz_class gcd = 0;
    std::vector<mpz_class> scaled;
    scaled.reserve(w->size());
    for (const auto& x : *w) {
        scaled.push_back(mpq_class(x * lcm).get_num());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.back().get_mpz_t());
    }
    std::vector<long> weights;
    weights.reserve(scaled.size());
    for (auto& x : scaled) weights.push_back(mpz_class(x / gcd).get_si());
    return weights;
}

/// Full analysis of one algebra. Every rational is kept exact; the renderers
/// below emit them as integer or "p/q" strings, never as floating point.
struct Report {
    std::size_t dim = 0;
    bool nilpotent = true;
    bool abelian = false;
    std::size_t step = 0;
    std::vector<std::size_t> type;             // quotient dimensions of the series
    std::optional<std::vector<long>> grading;  // minimal positive weights, if graded
    std::vector<BracketTriple> triples;        // index set; empty when abelian
    std::vector<Rational> constants;           // structure constants in that order
    std::optional<RatMatrix> gram;
    bool nice = false;
    SolitonVerdict verdict;
    std::size_t derivation_dim = 0;
    std::size_t diagonal_torus_dim = 0;        // upper bound story for real rank
    std::optional<RatMatrix> nikolayevsky;     // diagonal pre-Einstein solution
    bool nikolayevsky_verified = false;
};

inline Report analyze(const LieAlgebra& g) {
    Report r;
    r.dim = g.dim();
    r.abelian = g.is_abelian();
    try {
        r.type = nilpotency_type(g);
        r.step = r.type.size();
    } catch (const NotNilpotentError&) {
        r.nilpotent = false;
    }
    r.grading = derive_grading(g);
    if (!r.abelian) {
        r.triples = index_set(g);
        for (const auto& t : r.triples) r.constants.push_back(g.structure_constant(t.i, t.j, t.k));
        r.gram = gram_matrix(g);
        r.nice = is_nice(g);
    }
    if (r.nilpotent) {
        r.verdict = soliton_test(g);
    } else {
        r.verdict.tag = SolitonVerdict::Tag::inapplicable;
        r.verdict.reason = "algebra is not nilpotent";
    }
    auto der = derivation_algebra(g);
    r.derivation_dim = der.dim();
    r.diagonal_torus_dim = diagonal_derivations(g).size();
    if (auto nik = pre_einstein_diagonal(g, der)) {
        r.nikolayevsky_verified = verify_pre_einstein(g, *nik, der);
        r.nikolayevsky = std::move(*nik);
    }
    return r;
}

namespace detail {

inline std::string vec_text(const RatVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += rat_str(v[i]);
    }
    return s;
}

inline std::string matrix_text(const RatMatrix& m, const char* indent) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += indent;
        s += vec_text(m.row(r));
        s += '\n';
    }
    return s;
}

inline nlohmann::json vec_json(const RatVec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

inline nlohmann::json matrix_json(const RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
    return rows;
}

inline const char* verdict_name(const SolitonVerdict& v) {
    if (v.is_soliton()) return "soliton";
    if (v.is_nonsoliton()) return "nonsoliton";
    return "inapplicable";
}

}  // namespace detail

inline std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "dimension: " << r.dim << '\n';
    if (r.nilpotent) {
        out << "nilpotent: yes (step " << r.step << ", type";
        for (auto t : r.type) out << ' ' << t;
        out << ")\n";
    } else {
        out << "nilpotent: no\n";
    }
    if (r.grading) {
        out << "grading:";
        for (auto w : *r.grading) out << ' ' << w;
        out << '\n';
    } else {
        out << "grading: none (no positive weights satisfy the brackets)\n";
    }
    if (r.abelian) {
        out << "brackets: none (abelian)\n";
    } else {
        out << "bracket index set (" << r.triples.size()
            << (r.triples.size() == 1 ? " triple" : " triples") << ", ordered by target):\n";
        for (std::size_t a = 0; a < r.triples.size(); ++a) {
            const auto& t = r.triples[a];
            out << "  " << (a + 1) << ": [x" << t.i << ", x" << t.j << "] -> x" << t.k
                << "  (c = " << rat_str(r.constants[a]) << ")\n";
        }
        out << "nice basis: " << (r.nice ? "yes (no Gram entry equals 2)" : "no") << '\n';
        out << "gram matrix:\n" << detail::matrix_text(*r.gram, "  ");
    }
    out << "verdict: " << detail::verdict_name(r.verdict) << '\n';
    if (r.verdict.is_soliton()) {
        out << "  positive solution of U v = [1]: " << detail::vec_text(*r.verdict.witness)
            << '\n';
    } else if (r.verdict.is_nonsoliton()) {
        const auto& ev = *r.verdict.evidence;
        if (ev.solutions.consistent) {
            out << "  solution set of U v = [1]: affine dimension "
                << ev.solutions.nullspace_basis.size() << '\n';
            out << "    v0 = " << detail::vec_text(ev.solutions.particular) << '\n';
            for (const auto& kv : ev.solutions.nullspace_basis)
                out << "    kernel: " << detail::vec_text(kv) << '\n';
            auto zeros = ev.solutions.forced_zero_coordinates();
            if (!zeros.empty()) {
                out << "  forced zero coordinates:";
                for (auto z : zeros) {
                    const auto& t = r.triples[z];
                    out << " v" << (z + 1) << " (triple [x" << t.i << ", x" << t.j << "] -> x"
                        << t.k << ")";
                }
                out << '\n';
            }
            if (ev.t_star)
                out << "  largest uniform lower bound t* = " << rat_str(*ev.t_star)
                    << "; no strictly positive solution\n";
        } else {
            out << "  U v = [1] has no solution\n";
        }
    } else {
        out << "  reason: " << r.verdict.reason << '\n';
    }
    out << "derivations: dim Der = " << r.derivation_dim << ", diagonal torus dimension "
        << r.diagonal_torus_dim << '\n';
    if (r.nikolayevsky) {
        out << "nikolayevsky (diagonal pre-Einstein): diag "
            << detail::vec_text(r.nikolayevsky->diagonal_entries());
        out << (r.nikolayevsky_verified ? "  [trace conditions verified]\n"
                                        : "  [trace conditions FAILED]\n");
    } else {
        out << "nikolayevsky: no diagonal solution of the trace conditions\n";
    }
    return out.str();
}

inline nlohmann::json render_json(const Report& r) {
    nlohmann::json j;
    j["dim"] = r.dim;
    j["nilpotent"] = r.nilpotent;
    j["abelian"] = r.abelian;
    if (r.nilpotent) {
        j["step"] = r.step;
        j["type"] = r.type;
    } else {
        j["step"] = nullptr;
        j["type"] = nullptr;
    }
    if (r.grading)
        j["grading"] = *r.grading;
    else
        j["grading"] = nullptr;
    nlohmann::json triples = nlohmann::json::array();
    for (std::size_t a = 0; a < r.triples.size(); ++a) {
        const auto& t = r.triples[a];
        triples.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", rat_str(r.constants[a])}});
    }
    j["triples"] = triples;
    j["gram"] = r.gram ? detail::matrix_json(*r.gram) : nlohmann::json(nullptr);
    j["nice"] = r.nice;
    j["verdict"] = detail::verdict_name(r.verdict);
    j["witness"] = r.verdict.witness ? detail::vec_json(*r.verdict.witness)
                                     : nlohmann::json(nullptr);
    if (r.verdict.evidence) {
        const auto& ev = *r.verdict.evidence;
        nlohmann::json e;
        e["consistent"] = ev.solutions.consistent;
        if (ev.solutions.consistent) {
            e["particular"] = detail::vec_json(ev.solutions.particular);
            nlohmann::json kernel = nlohmann::json::array();
            for (const auto& kv : ev.solutions.nullspace_basis)
                kernel.push_back(detail::vec_json(kv));
            e["kernel"] = kernel;
            nlohmann::json zeros = nlohmann::json::array();
            for (auto z : ev.solutions.forced_zero_coordinates()) zeros.push_back(z + 1);
            e["forced_zero"] = zeros;
        }
        e["t_star"] = ev.t_star ? nlohmann::json(rat_str(*ev.t_star)) : nlohmann::json(nullptr);
        j["evidence"] = e;
    } else {
        j["evidence"] = nullptr;
    }
    j["reason"] = r.verdict.is_inapplicable() ? nlohmann::json(r.verdict.reason)
                                              : nlohmann::json(nullptr);
    j["derivation_dim"] = r.derivation_dim;
    j["diagonal_torus_dim"] = r.diagonal_torus_dim;
    if (r.nikolayevsky) {
        j["nikolayevsky"] = {{"diag", detail::vec_json(r.nikolayevsky->diagonal_entries())},
                             {"verified", r.nikolayevsky_verified}};
    } else {
        j["nikolayevsky"] = nullptr;
    }
    return j;
}

}  // namespace nilsol
