#include <doctest.h>

#include <map>

#include "revnf/golden.hpp"
#include "revnf/group.hpp"
#include "revnf/verify.hpp"

using namespace revnf;

namespace {

ScalarPoly x(int n, int i) { return ScalarPoly::variable(n, i); }

SignedElement kappa1() { return {RatMat::from({{0, 1}, {1, 0}}), 1}; }   // (x,y) -> (y,x)
SignedElement kappa2() { return {RatMat::from({{1, 0}, {0, -1}}), 1}; }  // (x,y) -> (x,-y)

}  // namespace

TEST_CASE("close_group on the involution phi") {
    FiniteSignedGroup G = close_group({{phi_matrix(), -1}}, 16);
    CHECK(G.order() == 2);
    CHECK(G.plus_elements().size() == 1);
    CHECK(G.plus_elements()[0].matrix.is_identity());
    CHECK(G.has_reversing());
    CHECK(G.delta().matrix == phi_matrix());
}

TEST_CASE("close_group edge cases") {
    FiniteSignedGroup trivial = close_group({{RatMat::identity(3), 1}}, 1);
    CHECK(trivial.order() == 1);
    CHECK(!trivial.has_reversing());

    // Two plane reflections generate a dihedral group of order 8.
    FiniteSignedGroup d4 = close_group({kappa1(), kappa2()}, 16);
    CHECK(d4.order() == 8);
    CHECK(!d4.has_reversing());

    // sigma must be a homomorphism: the identity cannot be a reversor.
    CHECK_THROWS_WITH_AS(close_group({{RatMat::identity(2), -1}}, 4), doctest::Contains("homomorphism"),
                         std::domain_error);
    // Same reflection with both signs.
    CHECK_THROWS_AS(close_group({kappa2(), {kappa2().matrix, -1}}, 16), std::domain_error);

    // Infinite group tripped by the bound.
    CHECK_THROWS_WITH_AS(close_group({{RatMat::from({{1, 1}, {0, 1}}), 1}}, 64),
                         doctest::Contains("not finite within bound"), std::domain_error);

    // Singular generator.
    CHECK_THROWS(close_group({{RatMat::from({{1, 0}, {0, 0}}), 1}}, 4));
}

TEST_CASE("sign map is a homomorphism on closed groups") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2xz2, {1, -1, -1});
    CHECK(G.order() == 4);
    struct Less {
        bool operator()(const RatMat& a, const RatMat& b) const { return a.lex_less(b); }
    };
    std::map<RatMat, int, Less> signs;
    for (const auto& e : G.elements()) signs[e.matrix] = e.sign;
    for (const auto& a : G.elements())
        for (const auto& b : G.elements()) {
            auto it = signs.find(a.matrix * b.matrix);
            REQUIRE(it != signs.end());  // closed under products
            CHECK(it->second == a.sign * b.sign);
        }
}

TEST_CASE("odot action") {
    SignedElement phi{phi_matrix(), -1};
    SignedElement id{RatMat::identity(6), 1};
    ScalarPoly f = x(6, 0) * x(6, 1) + x(6, 3);
    CHECK(act_odot(id, f) == f);
    CHECK(act_odot(phi, x(6, 1)) == x(6, 1) * rat(-1));
    CHECK(act_odot(phi, x(6, 0)) == x(6, 0));
    CHECK_THROWS(act_odot(phi, x(2, 0)));
}

TEST_CASE("star action") {
    SignedElement g{RatMat::from({{1, 0}, {0, -1}}), 1};
    CHECK(act_star(g, VecPoly::identity(2)) == VecPoly::identity(2));
    VecPoly p(2);
    p.comp(0) = x(2, 1);
    VecPoly expected(2);
    expected.comp(0) = x(2, 1) * rat(-1);
    CHECK(act_star(g, p) == expected);

    // star composes contravariantly: g ⋆ (h ⋆ p) = (hg) ⋆ p.
    FiniteSignedGroup d4 = close_group({kappa1(), kappa2()}, 16);
    VecPoly q = random_homogeneous(2, 3, 99);
    for (const auto& a : d4.elements())
        for (const auto& b : d4.elements()) {
            SignedElement ba{b.matrix * a.matrix, b.sign * a.sign};
            CHECK(act_star(a, act_star(b, q)) == act_star(ba, q));
        }
}

TEST_CASE("Reynolds operators on the phi group") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    auto u = golden_basic_invariants(1, 1);

    CHECK(reynolds_R(G, u[0]) == u[0]);      // R(x1) = x1
    CHECK(reynolds_S(G, u[0]).is_zero());    // S(x1) = 0
    CHECK(reynolds_R(G, u[4]).is_zero());    // R(Im) = 0
    CHECK(reynolds_S(G, u[4]) == u[4]);      // S(Im) = Im
    CHECK(reynolds_R(G, ScalarPoly(6)).is_zero());
    CHECK(reynolds_S(G, ScalarPoly(6)).is_zero());

    // R + S = id, R^2 = R, S^2 = S, RS = SR = 0 on random inputs
    // (Gamma_+ here is trivial, so every polynomial is admissible).
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        ScalarPoly f = random_homogeneous(6, 3, seed).comp(0);
        ScalarPoly r = reynolds_R(G, f), s = reynolds_S(G, f);
        CHECK(r + s == f);
        CHECK(reynolds_R(G, r) == r);
        CHECK(reynolds_S(G, s) == s);
        CHECK(reynolds_S(G, r).is_zero());
        CHECK(reynolds_R(G, s).is_zero());
    }
}

TEST_CASE("Reynolds preconditions") {
    // Gamma_+ nontrivial: phi psi generates the symmetry part.
    FiniteSignedGroup G = golden_group(GoldenFamily::z2xz2, {-1, 1, 1});
    // x1 is not Gamma_+-invariant here (phi psi flips x1).
    CHECK_THROWS_WITH_AS(reynolds_R(G, x(6, 0)), doctest::Contains("not Gamma_+-invariant"),
                         std::invalid_argument);
    // (x3, 0, ...) picks up weight -1 under phi*psi: not Gamma_+-equivariant.
    VecPoly bad(6);
    bad.comp(0) = x(6, 2);
    CHECK_THROWS_AS(vec_S(G, bad), std::invalid_argument);

    FiniteSignedGroup trivial = FiniteSignedGroup::trivial(2);
    CHECK_THROWS_AS(reynolds_R(trivial, x(2, 0)), std::domain_error);
    CHECK_THROWS_AS(project_pi(trivial, VecPoly::identity(2)), std::domain_error);
}

TEST_CASE("vector Reynolds operators split the plus-equivariants") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    // The identity map is delta-star-fixed, hence purely equivariant.
    VecPoly id = VecPoly::identity(6);
    CHECK(vec_R(G, id) == id);
    CHECK(vec_S(G, id).is_zero());

    // H0 = (0,1,0,0,0,0) is purely reversible-equivariant.
    VecPoly h0 = golden_generator_list(1, 1)[0];
    CHECK(vec_S(G, h0) == h0);
    CHECK(vec_R(G, h0).is_zero());

    CHECK(vec_R(G, VecPoly::zero(6)).is_zero());
    CHECK(vec_S(G, VecPoly::zero(6)).is_zero());
}

TEST_CASE("pi projects onto the reversible-equivariants") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2xz2, {1, -1, 1});
    CHECK(project_pi(G, VecPoly::zero(6)).is_zero());

    for (std::uint64_t seed : {21u, 22u}) {
        VecPoly p = random_homogeneous(6, 2, seed);
        VecPoly pi_p = project_pi(G, p);
        CHECK(project_pi(G, pi_p) == pi_p);  // fixed point of pi
        std::string who;
        CHECK(is_rev_equivariant(G, pi_p, &who));
        // pi kills the averaged (equivariant) part.
        CHECK(project_pi(G, average_star(G, p)).is_zero());
    }
}
