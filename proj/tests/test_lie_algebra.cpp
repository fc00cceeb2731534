#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilsol/families.hpp"
#include "nilsol/lie_algebra.hpp"

using namespace nilsol;

namespace {

LieAlgebra broken_five_dim() {
    LieAlgebra::BracketMap t;
    t[{1, 2, 3}] = 1;
    t[{1, 3, 4}] = -1;
    t[{2, 3, 4}] = 1;
    t[{1, 4, 5}] = 1;
    t[{2, 4, 3}] = 1;
    return LieAlgebra::unvalidated(5, std::move(t));
}

}  // namespace

TEST_CASE("bracket of basis vectors follows the table", "[lie]") {
    auto g = family_dim8(Rational(1));
    CHECK(g.bracket(g.basis_vector(2), g.basis_vector(3)) == g.basis_vector(4));
    CHECK(g.bracket(g.basis_vector(3), g.basis_vector(2)) ==
          vec_scaled(g.basis_vector(4), rat(-1)));

    auto h = family_dim8(Rational(2));
    CHECK(h.bracket(h.basis_vector(1), h.basis_vector(3)) ==
          vec_scaled(h.basis_vector(5), rat(2)));
    CHECK(h.structure_constant(2, 3, 4) == rat(1, 2));
    CHECK(h.structure_constant(3, 2, 4) == rat(-1, 2));
    CHECK(h.structure_constant(1, 1, 4) == 0);
    CHECK(h.structure_constant(4, 5, 6) == 0);
}

TEST_CASE("bracket is bilinear and antisymmetric", "[lie]") {
    auto g = family_dim9(rat(7, 5));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int it = 0; it < 30; ++it) {
        RatVec x(9), y(9);
        for (auto& v : x) v = rat(num(rng));
        for (auto& v : y) v = rat(num(rng));
        RatVec xy = g.bracket(x, y);
        RatVec yx = g.bracket(y, x);
        CHECK(xy == vec_scaled(yx, rat(-1)));
        CHECK(vec_is_zero(g.bracket(x, x)));
        RatVec x2 = vec_scaled(x, rat(3, 2));
        CHECK(g.bracket(x2, y) == vec_scaled(xy, rat(3, 2)));
    }
}

TEST_CASE("construction validates the table shape", "[lie]") {
    LieAlgebra::BracketMap bad1{{{2, 1, 3}, Rational(1)}};
    CHECK_THROWS_AS(LieAlgebra(3, bad1), std::invalid_argument);
    LieAlgebra::BracketMap bad2{{{1, 2, 4}, Rational(1)}};
    CHECK_THROWS_AS(LieAlgebra(3, bad2), std::invalid_argument);
    LieAlgebra::BracketMap bad3{{{1, 2, 3}, Rational(0)}};
    CHECK_THROWS_AS(LieAlgebra(3, bad3), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra(0, LieAlgebra::BracketMap{}), std::invalid_argument);
}

TEST_CASE("jacobi_check is empty on the families", "[lie]") {
    for (const auto& q : {rat(1), rat(2), rat(1, 3), rat(7, 5)}) {
        CHECK(jacobi_check(family_dim8(q)).empty());
        CHECK(jacobi_check(family_dim9(q)).empty());
    }
}

TEST_CASE("jacobi_check reports defects of a broken table", "[lie]") {
    auto g = broken_five_dim();
    auto defects = jacobi_check(g);
    REQUIRE_FALSE(defects.empty());
    bool found = false;
    for (const auto& d : defects)
        if (d.i == 1 && d.j == 2 && d.k == 3) {
            found = true;
            RatVec expect{0, 0, -1, 0, -1};
            CHECK(d.defect == expect);
        }
    CHECK(found);

    LieAlgebra::BracketMap t = g.brackets();
    CHECK_THROWS_AS(LieAlgebra(5, t), JacobiError);
    try {
        LieAlgebra(5, t);
    } catch (const JacobiError& e) {
        CHECK_FALSE(e.defects().empty());
    }
}

TEST_CASE("lower central series dimensions", "[lie]") {
    auto dims = [](const LieAlgebra& g) {
        std::vector<std::size_t> d;
        for (const auto& s : lower_central_series(g)) d.push_back(s.dim());
        return d;
    };
    CHECK(dims(family_dim8(rat(1))) == std::vector<std::size_t>{8, 5, 2, 0});
    CHECK(dims(family_dim9(rat(2))) == std::vector<std::size_t>{9, 6, 3, 0});
    CHECK(dims(LieAlgebra(4, {})) == std::vector<std::size_t>{4, 0});
    CHECK(dims(heisenberg(2).algebra) == std::vector<std::size_t>{5, 1, 0});
}

TEST_CASE("nilpotency type", "[lie]") {
    CHECK(nilpotency_type(family_dim8(rat(1, 3))) == std::vector<std::size_t>{3, 3, 2});
    CHECK(nilpotency_type(family_dim9(rat(1))) == std::vector<std::size_t>{3, 3, 3});
    CHECK(nilpotency_type(heisenberg(1).algebra) == std::vector<std::size_t>{2, 1});
    CHECK(nilpotency_type(LieAlgebra(4, {})) == std::vector<std::size_t>{4});
    CHECK(nilpotency_step(family_dim8(rat(1))) == 3);

    for (int k : {1, 2, 3}) {
        auto e8 = family_extended(8, k, rat(1));
        CHECK(nilpotency_type(e8.algebra) ==
              std::vector<std::size_t>{static_cast<std::size_t>(2 * k + 3), 3, 2});
        auto e9 = family_extended(9, k, rat(2));
        CHECK(nilpotency_type(e9.algebra) ==
              std::vector<std::size_t>{static_cast<std::size_t>(2 * k + 3), 3, 3});
    }
}

TEST_CASE("non-nilpotent algebras are rejected by nilpotency_type", "[lie]") {
    LieAlgebra::BracketMap t{{{1, 2, 2}, Rational(1)}};
    LieAlgebra g(2, std::move(t));
    auto series = lower_central_series(g);
    CHECK(series.back().dim() == 1);
    CHECK_THROWS_AS(nilpotency_type(g), NotNilpotentError);
}

TEST_CASE("verify_grading", "[lie]") {
    auto g = family_dim8(rat(2));
    CHECK(verify_grading(g, Grading{{1, 1, 1, 2, 2, 2, 3, 3}}));
    CHECK(verify_grading(g, Grading{{2, 2, 2, 4, 4, 4, 6, 6}}));
    CHECK_FALSE(verify_grading(g, Grading{{1, 1, 1, 1, 1, 1, 1, 1}}));
    CHECK_FALSE(verify_grading(g, Grading{{1, 1, 1, 2, 2, 2, 3, 3, 1}}));
    CHECK_FALSE(verify_grading(g, Grading{{0, 1, 1, 1, 1, 1, 1, 1}}));

    auto fam = family_extended(9, 2, rat(1, 3));
    CHECK(verify_grading(fam.algebra, fam.grading));
    CHECK(verify_grading(LieAlgebra(3, {}), Grading{{5, 1, 2}}));
}

TEST_CASE("ad matrices and ranks", "[lie]") {
    auto g = family_dim8(rat(1));
    auto ad1 = ad_matrix(g, g.basis_vector(1));
    CHECK(ad1.rows() == 8);
    // [x1, x2] = x6, [x1, x3] = x5, [x1, x6] = x8
    CHECK(ad1(5, 1) == 1);
    CHECK(ad1(4, 2) == 1);
    CHECK(ad1(7, 5) == 1);
    CHECK(ad_rank(g, g.basis_vector(1)) == 3);
    CHECK(ad_rank(g, g.basis_vector(2)) == 4);
    CHECK(ad_rank(g, g.basis_vector(8)) == 0);

    RatVec x = g.basis_vector(1);
    CHECK(ad_matrix(g, vec_scaled(x, rat(5))) == ad_matrix(g, x).scaled(rat(5)));
    CHECK(ad_rank(g, vec_scaled(x, rat(-7, 3))) == 3);
}

TEST_CASE("center and commutator ideal", "[lie]") {
    auto g = family_dim8(rat(2));
    auto z = center(g);
    CHECK(z.dim() == 2);
    CHECK(z.contains(g.basis_vector(7)));
    CHECK(z.contains(g.basis_vector(8)));
    CHECK_FALSE(z.contains(g.basis_vector(6)));

    auto c = commutator_ideal(g);
    CHECK(c.dim() == 5);
    for (int i = 4; i <= 8; ++i) CHECK(c.contains(g.basis_vector(i)));
    CHECK_FALSE(c.contains(g.basis_vector(1)));

    CHECK(center(LieAlgebra(4, {})) == Subspace::full(4));
    CHECK(center(heisenberg(2).algebra).dim() == 1);
}

TEST_CASE("centralizer of the commutator ideal", "[lie]") {
    auto g = family_dim9(rat(1));
    auto c = centralizer(g, commutator_ideal(g));
    CHECK(c.dim() == 6);
    for (int i = 4; i <= 9; ++i) CHECK(c.contains(g.basis_vector(i)));

    auto fam = family_extended(9, 1, rat(1));
    auto ce = centralizer(fam.algebra, commutator_ideal(fam.algebra));
    CHECK(ce.dim() == 8);
    for (int i : {4, 5, 6, 7, 8, 9, 10, 11}) CHECK(ce.contains(fam.algebra.basis_vector(i)));

    // w is always inside the centralizer of its centralizer
    auto w = Subspace::span(9, {g.basis_vector(7)});
    CHECK(centralizer(g, centralizer(g, w)).contains(w));
}
