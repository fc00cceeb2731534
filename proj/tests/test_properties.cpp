#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "nilsol/derivations.hpp"
#include "nilsol/families.hpp"
#include "nilsol/io.hpp"
#include "nilsol/report.hpp"
#include "nilsol/soliton.hpp"

using namespace nilsol;

namespace {

Rational random_rational(std::mt19937& rng, bool allow_negative = true) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
    Rational r = rat(num(rng), den(rng));
    if (allow_negative && sign(rng)) r = -r;
    return r;
}

Rational random_positive(std::mt19937& rng) { return random_rational(rng, false); }

// Two-step algebras: every bracket lands in the center, so double brackets
// vanish and the Jacobi identity holds for any choice of constants.
LieAlgebra random_two_step(std::mt19937& rng, bool distinct_targets) {
    std::uniform_int_distribution<int> gens(2, 4), cents(1, 4);
    int p = gens(rng);
    int c = cents(rng);
    int n = p + c;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    LieAlgebra::BracketMap table;
    std::uniform_int_distribution<int> target(p + 1, n);
    if (distinct_targets) {
        // one bracket per center vector: the Gram matrix then has diagonal 3
        // and off-diagonal entries in {0, 1}, so the basis is always nice
        std::size_t m = std::min(pairs.size(), static_cast<std::size_t>(c));
        for (std::size_t a = 0; a < m; ++a)
            table[{pairs[a].first, pairs[a].second, p + 1 + static_cast<int>(a)}] =
                random_rational(rng);
    } else {
        std::uniform_int_distribution<int> count(1, static_cast<int>(pairs.size()));
        int m = count(rng);
        for (int a = 0; a < m; ++a)
            table[{pairs[a].first, pairs[a].second, target(rng)}] = random_rational(rng);
    }
    if (table.empty()) table[{1, 2, p + 1}] = 1;
    return LieAlgebra(static_cast<std::size_t>(n), std::move(table));
}

RatVec random_vector(std::mt19937& rng, std::size_t n) {
    RatVec v(n);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (auto& x : v) x = rat(num(rng), den(rng));
    return v;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("bracket is antisymmetric and bilinear on random vectors", "[properties]") {
    std::mt19937 rng(20260819);
    for (int trial = 0; trial < 120; ++trial) {
        LieAlgebra g = random_two_step(rng, false);
        RatVec x = random_vector(rng, g.dim());
        RatVec y = random_vector(rng, g.dim());
        RatVec z = random_vector(rng, g.dim());
        Rational a = random_rational(rng), b = random_rational(rng);

        REQUIRE(g.bracket(x, y) == vec_scaled(g.bracket(y, x), -1));
        REQUIRE(g.bracket(x, x) == RatVec(g.dim()));
        REQUIRE(g.bracket(vec_add(vec_scaled(x, a), vec_scaled(z, b)), y) ==
                vec_add(vec_scaled(g.bracket(x, y), a), vec_scaled(g.bracket(z, y), b)));
    }
}

TEST_CASE("derived gradings satisfy the bracket weight equations", "[properties]") {
    std::mt19937 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 110; ++trial) {
        LieAlgebra g = random_two_step(rng, trial % 2 == 0);
        auto weights = derive_grading(g);
        REQUIRE(weights.has_value());
        for (long w : *weights) REQUIRE(w >= 1);
        REQUIRE(verify_grading(g, Grading{*weights}));
        ++checked;
    }
    // the built-in families carry gradings at every parameter value
    for (int m : {8, 9})
        for (int k : {0, 1, 2})
            for (int t = 0; t < 3; ++t) {
                auto g = family_extended(m, k, random_positive(rng)).algebra;
                auto weights = derive_grading(g);
                REQUIRE(weights.has_value());
                REQUIRE(verify_grading(g, Grading{*weights}));
                ++checked;
            }
    CHECK(checked >= 100);
}

TEST_CASE("derivation algebras are closed under the matrix commutator", "[properties]") {
    std::mt19937 rng(42);
    int checked = 0;

    auto check_closure = [&](const LieAlgebra& g, int max_pairs) {
        auto der = derivation_algebra(g);
        REQUIRE(der.dim() >= 1);
        std::uniform_int_distribution<std::size_t> pick(0, der.dim() - 1);
        for (int t = 0; t < max_pairs; ++t) {
            const RatMatrix& d1 = der.basis[pick(rng)];
            const RatMatrix& d2 = der.basis[pick(rng)];
            REQUIRE(is_derivation(g, commutator(d1, d2)));
            ++checked;
        }
        // random linear combinations stay derivations
        RatMatrix combo(g.dim(), g.dim());
        for (const auto& d : der.basis) combo = combo + d.scaled(random_rational(rng));
        REQUIRE(is_derivation(g, combo));
        ++checked;
    };

    check_closure(family_dim8(Rational(2)), 30);
    check_closure(family_dim9(Rational(3, 2)), 30);
    check_closure(heisenberg(2).algebra, 15);
    for (int trial = 0; trial < 8; ++trial) check_closure(random_two_step(rng, false), 5);
    CHECK(checked >= 100);
}

TEST_CASE("soliton verdicts agree with sampling of the solution set", "[properties]") {
    std::mt19937 rng(99);
    int checked = 0;
    int solitons = 0, nonsolitons = 0;
    while (checked < 100) {
        // mix generic two-step algebras with the built-in nonsoliton families
        // so both verdict branches are exercised
        LieAlgebra g = (checked % 4 == 3)
                           ? family_extended(checked % 8 == 3 ? 8 : 9, checked % 3,
                                             random_positive(rng))
                                 .algebra
                           : random_two_step(rng, true);
        REQUIRE(is_nice(g));
        auto u = gram_matrix(g);
        RatVec ones(u.rows(), Rational(1));
        auto verdict = soliton_test(g);

        if (verdict.is_soliton()) {
            ++solitons;
            const RatVec& v = *verdict.witness;
            REQUIRE(u * v == ones);
            for (const auto& x : v) REQUIRE(x > 0);
        } else {
            ++nonsolitons;
            REQUIRE(verdict.is_nonsoliton());
            const auto& ev = *verdict.evidence;
            REQUIRE(ev.t_star.has_value());
            REQUIRE(*ev.t_star <= 0);
            REQUIRE(ev.solutions.consistent);
            // sampled points of the affine solution set solve the system but
            // are never strictly positive
            for (int s = 0; s < 5; ++s) {
                RatVec pt = ev.solutions.particular;
                for (const auto& kv : ev.solutions.nullspace_basis)
                    pt = vec_add(pt, vec_scaled(kv, random_rational(rng)));
                REQUIRE(u * pt == ones);
                bool all_positive = true;
                for (const auto& x : pt)
                    if (x <= 0) all_positive = false;
                REQUIRE_FALSE(all_positive);
            }
        }
        ++checked;
    }
    CHECK(checked >= 100);
    CHECK(solitons > 0);
    CHECK(nonsolitons > 0);
}

TEST_CASE("niceness agrees with the inapplicable verdict", "[properties]") {
    std::mt19937 rng(3);
    int seen_not_nice = 0;
    for (int trial = 0; trial < 120; ++trial) {
        LieAlgebra g = random_two_step(rng, false);
        auto verdict = soliton_test(g);
        if (is_nice(g)) {
            REQUIRE_FALSE(verdict.is_inapplicable());
        } else {
            REQUIRE(verdict.is_inapplicable());
            REQUIRE(verdict.reason.find("entry equal to 2") != std::string::npos);
            ++seen_not_nice;
        }
    }
    CHECK(seen_not_nice > 0);
}

TEST_CASE("serialize then parse is the identity", "[properties]") {
    std::mt19937 rng(2718);
    int checked = 0;
    for (int trial = 0; trial < 110; ++trial) {
        LieAlgebra g = random_two_step(rng, false);
        REQUIRE(parse_algebra(serialize(g)) == g);
        ++checked;
    }
    for (int m : {8, 9})
        for (int k : {0, 1, 3}) {
            auto g = family_extended(m, k, random_positive(rng)).algebra;
            REQUIRE(parse_algebra(serialize(g)) == g);
            ++checked;
        }
    CHECK(checked >= 100);

    // comments and blank lines do not change the parsed algebra
    LieAlgebra g = family_dim8(Rational(5, 7));
    std::string text = serialize(g);
    std::string padded = "# header comment\n\n";
    for (char ch : text) {
        padded += ch;
        if (ch == '\n') padded += "# interleaved\n\n";
    }
    REQUIRE(parse_algebra(padded) == g);
}
