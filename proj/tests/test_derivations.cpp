#include <catch2/catch_amalgamated.hpp>

#include "nilsol/derivations.hpp"
#include "nilsol/families.hpp"
#include "nilsol/reference_data.hpp"

using namespace nilsol;

namespace {

RatMatrix diag_long(const std::vector<long>& w) {
    RatVec d;
    for (long x : w) d.push_back(rat(x));
    return RatMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("derivation algebra dimensions of the base families", "[derivations]") {
    // At q = 1 every structure constant collapses to 1 and the dimension-8
    // algebra picks up one extra derivation; away from that coincidence the
    // dimension is 16.  The nine-dimensional family stays at 19 throughout.
    CHECK(derivation_algebra(family_dim8(rat(1))).dim() ==
          reference::dim8_derivation_dim_q1);
    for (const auto& q : {rat(2), rat(7, 5), rat(1, 3), rat(3)})
        CHECK(derivation_algebra(family_dim8(q)).dim() == reference::dim8_derivation_dim);
    for (const auto& q : {rat(1), rat(2), rat(7, 5)})
        CHECK(derivation_algebra(family_dim9(q)).dim() == reference::dim9_derivation_dim);
}

TEST_CASE("derivation algebra of an abelian algebra is everything", "[derivations]") {
    auto der = derivation_algebra(LieAlgebra(3, {}));
    CHECK(der.dim() == 9);
    CHECK(is_derivation(LieAlgebra(3, {}), RatMatrix::identity(3)));
}

TEST_CASE("derivation basis elements are derivations and close under bracket",
          "[derivations]") {
    auto g = family_dim8(rat(2));
    auto der = derivation_algebra(g);
    REQUIRE(der.dim() == 16);
    for (const auto& f : der.basis) CHECK(is_derivation(g, f));
    // commutator spot checks; the full pairwise sweep lives in the property suite
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            RatMatrix c = der.basis[a] * der.basis[b] - der.basis[b] * der.basis[a];
            CHECK(is_derivation(g, c));
        }
}

TEST_CASE("is_derivation recognizes grading derivations", "[derivations]") {
    for (const auto& q : {rat(1), rat(2), rat(1, 3)}) {
        auto g = family_dim8(q);
        CHECK(is_derivation(g, diag_long({1, 1, 1, 2, 2, 2, 3, 3})));
        CHECK_FALSE(is_derivation(g, RatMatrix::identity(8)));
        CHECK_FALSE(is_derivation(g, diag_long({1, 1, 1, 1, 2, 2, 3, 3})));
    }
    auto fam = family_extended(8, 1, rat(7, 5));
    CHECK(is_derivation(fam.algebra, fam.derivation));
    CHECK(is_derivation(fam.algebra, diag_long({2, 2, 2, 4, 4, 4, 6, 6, 3, 3})));
    CHECK_THROWS_AS(is_derivation(fam.algebra, RatMatrix::identity(9)),
                    std::invalid_argument);
}

TEST_CASE("inner derivations", "[derivations]") {
    auto g = family_dim9(rat(2));
    for (int i : {1, 2, 5, 9}) CHECK(is_derivation(g, ad_matrix(g, g.basis_vector(i))));
}

TEST_CASE("trace normalization of the dimension-8 grading derivation", "[derivations]") {
    auto g = family_dim8(rat(1));
    RatMatrix d = diag_long({1, 1, 1, 2, 2, 2, 3, 3});
    RatMatrix n = nikolayevsky_rank_one(g, d);
    CHECK(n == d.scaled(reference::dim8_scalar()));
    CHECK(n(0, 0) == rat(5, 11));
    CHECK(n(7, 7) == rat(15, 11));

    // scale invariance of the normalization target
    CHECK(nikolayevsky_rank_one(g, d.scaled(rat(2))) == n);
    CHECK(nikolayevsky_rank_one(g, d.scaled(rat(1, 3))) == n);

    auto der = derivation_algebra(g);
    CHECK(verify_pre_einstein(g, n, der));
    CHECK_FALSE(verify_pre_einstein(g, d, der));
}

TEST_CASE("trace normalization scalar for the dimension-9 family", "[derivations]") {
    auto g = family_dim9(rat(1));
    RatMatrix d = diag_long({1, 1, 1, 2, 2, 2, 3, 3, 3});
    CHECK(d.trace() == 18);
    CHECK((d * d).trace() == 42);
    RatMatrix n = nikolayevsky_rank_one(g, d);
    CHECK(n == d.scaled(reference::dim9_scalar_computed()));

    auto der = derivation_algebra(g);
    REQUIRE(der.dim() == 19);
    CHECK(verify_pre_einstein(g, d.scaled(reference::dim9_scalar_computed()), der));
    CHECK_FALSE(verify_pre_einstein(g, d.scaled(reference::dim9_scalar_quoted()), der));
}

TEST_CASE("nikolayevsky_rank_one rejects bad inputs", "[derivations]") {
    auto g = family_dim8(rat(1));
    CHECK_THROWS_AS(nikolayevsky_rank_one(g, RatMatrix(8, 8)), std::invalid_argument);
    CHECK_THROWS_AS(nikolayevsky_rank_one(g, RatMatrix::identity(8)),
                    std::invalid_argument);  // diagonal but not a derivation
    CHECK_THROWS_AS(nikolayevsky_rank_one(g, ad_matrix(g, g.basis_vector(1))),
                    std::invalid_argument);  // derivation but not diagonal
    CHECK_THROWS_AS(nikolayevsky_rank_one(g, RatMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("diagonal derivation spaces", "[derivations]") {
    auto t8 = diagonal_derivations(family_dim8(rat(2)));
    REQUIRE(t8.size() == 1);
    auto want = Subspace::span(8, {reference::dim8_grading_diag()});
    CHECK(Subspace::span(8, t8) == want);

    CHECK(diagonal_derivations(LieAlgebra(4, {})).size() == 4);
    CHECK(diagonal_derivations(heisenberg(1).algebra).size() == 2);
    CHECK(diagonal_derivations(family_dim9(rat(1))).size() == 1);
}

TEST_CASE("diagonal pre-Einstein solutions", "[derivations]") {
    auto g8 = family_dim8(rat(2));
    auto der8 = derivation_algebra(g8);
    auto d8 = pre_einstein_diagonal(g8, der8);
    REQUIRE(d8.has_value());
    CHECK(*d8 == RatMatrix::diagonal(vec_scaled(reference::dim8_grading_diag(),
                                                reference::dim8_scalar())));
    CHECK(verify_pre_einstein(g8, *d8, der8));

    auto g9 = family_dim9(rat(1));
    auto der9 = derivation_algebra(g9);
    auto d9 = pre_einstein_diagonal(g9, der9);
    REQUIRE(d9.has_value());
    CHECK(*d9 == RatMatrix::diagonal(vec_scaled(reference::dim9_grading_diag(),
                                                reference::dim9_scalar_computed())));
}

TEST_CASE("heisenberg trace-normalized derivations are pre-Einstein", "[derivations]") {
    for (int k : {1, 2, 3}) {
        auto h = heisenberg(k);
        auto der = derivation_algebra(h.algebra);
        CHECK(verify_pre_einstein(h.algebra, h.nikolayevsky, der));
        RatMatrix gen(h.algebra.dim(), h.algebra.dim());
        for (std::size_t i = 0; i + 1 < h.algebra.dim(); ++i) gen(i, i) = 1;
        gen(h.algebra.dim() - 1, h.algebra.dim() - 1) = 2;
        CHECK(nikolayevsky_rank_one(h.algebra, gen) == h.nikolayevsky);
        auto d = pre_einstein_diagonal(h.algebra, der);
        REQUIRE(d.has_value());
        CHECK(*d == h.nikolayevsky);
    }
}

TEST_CASE("extended family derivation satisfies the scaled trace condition",
          "[derivations]") {
    auto fam = family_extended(8, 1, rat(1));
    auto der = derivation_algebra(fam.algebra);
    CHECK(verify_pre_einstein(fam.algebra, fam.derivation.scaled(fam.lambda), der));
    CHECK_FALSE(verify_pre_einstein(fam.algebra, fam.derivation, der));
    CHECK(nikolayevsky_rank_one(fam.algebra, fam.derivation) ==
          fam.derivation.scaled(fam.lambda));
}
