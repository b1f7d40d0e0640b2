#include <doctest.h>

#include <algorithm>

#include "revnf/golden.hpp"
#include "revnf/homological.hpp"
#include "revnf/spaces.hpp"
#include "revnf/verify.hpp"

using namespace revnf;

namespace {

ScalarPoly x(int n, int i) { return ScalarPoly::variable(n, i); }

// The padded one-parameter-group generators on the rotation blocks for
// (n1, n2) = (1, 1): values z1, i z1, z2, i z2 placed in either complex slot.
std::vector<VecPoly> s1_block_gens_11() {
    auto put = [](int slot, int re_var, int im_var, bool times_i) {
        VecPoly p(6);
        if (!times_i) {
            p.comp(slot) = x(6, re_var);
            p.comp(slot + 1) = x(6, im_var);
        } else {
            p.comp(slot) = x(6, im_var) * rat(-1);
            p.comp(slot + 1) = x(6, re_var);
        }
        return p;
    };
    return {put(2, 2, 3, false), put(2, 2, 3, true), put(2, 4, 5, false), put(2, 4, 5, true),
            put(4, 4, 5, false), put(4, 4, 5, true), put(4, 2, 3, false), put(4, 2, 3, true)};
}

}  // namespace

TEST_CASE("fixed spaces of the phi involution") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    GradedSubspace inv = invariants_deg(G, 1);
    CHECK(subspace_equal(inv, subspace_from_polys({x(6, 0), x(6, 2), x(6, 4)}, 6, 1)));
    GradedSubspace anti = anti_invariants_deg(G, 1);
    CHECK(subspace_equal(anti, subspace_from_polys({x(6, 1), x(6, 3), x(6, 5)}, 6, 1)));

    FiniteSignedGroup trivial = FiniteSignedGroup::trivial(3);
    for (int k : {0, 1, 2})
        CHECK(subspace_equal(invariants_deg(trivial, k), full_slice(SpaceKind::scalar, 3, k)));
}

TEST_CASE("defining relations hold on every basis column") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2xz2, {1, -1, -1});
    for (int k : {1, 2, 3}) {
        for (const auto& f : scalar_basis_polys(invariants_deg(G, k)))
            for (const auto& g : G.generators()) CHECK(act_odot(g, f) == f);
        for (const auto& f : scalar_basis_polys(anti_invariants_deg(G, k)))
            for (const auto& g : G.generators()) CHECK(act_odot(g, f) == f * rat(g.sign));
        for (const auto& p : vector_basis_polys(equivariants_deg(G, k)))
            for (const auto& g : G.generators()) CHECK(act_star(g, p) == p);
        for (const auto& p : vector_basis_polys(rev_equivariants_deg(G, k)))
            for (const auto& g : G.generators()) CHECK(act_star(g, p) == p * rat(g.sign));
    }
}

TEST_CASE("plus decomposition") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    DecomposeReport r1 = decompose_plus_check(G, 1);
    CHECK(r1.pass());
    CHECK(r1.dim_plus_scalar == 6);
    CHECK(r1.dim_inv == 3);
    CHECK(r1.dim_anti == 3);

    DecomposeReport r0 = decompose_plus_check(G, 0);
    CHECK(r0.pass());
    CHECK(r0.dim_plus_scalar == 1);
    CHECK(r0.dim_inv == 1);
    CHECK(r0.dim_anti == 0);

    // Degenerate psi = phi collapses to the order-2 group; still consistent.
    FiniteSignedGroup deg = golden_group(GoldenFamily::z2xz2, {1, 1, 1});
    CHECK(deg.order() == 2);
    CHECK(decompose_plus_check(deg, 1).pass());

    FiniteSignedGroup G4 = golden_group(GoldenFamily::z2xz2, {-1, -1, -1});
    for (int k : {0, 1, 2, 3}) CHECK(decompose_plus_check(G4, k).pass());

    CHECK_THROWS_AS(decompose_plus_check(FiniteSignedGroup::trivial(2), 1), std::domain_error);
}

TEST_CASE("intersect") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    GradedSubspace a = equivariants_deg(G, 2);
    CHECK(subspace_equal(intersect(a, a), a));
    CHECK(intersect(a, zero_slice(SpaceKind::vector, 6, 2)).dim() == 0);

    // Membership oracle: the intersection contains exactly the common members.
    VecPoly p1(2), p2(2), q1(2);
    p1.comp(0) = x(2, 0) * x(2, 0);
    p1.comp(1) = x(2, 0) * x(2, 1);
    p2.comp(1) = x(2, 0) * x(2, 0);
    q1.comp(0) = x(2, 0) * x(2, 0);
    GradedSubspace left = subspace_from_polys(std::vector<VecPoly>{p1, p2}, 2, 2);
    GradedSubspace right = subspace_from_polys(std::vector<VecPoly>{p1, q1}, 2, 2);
    GradedSubspace both = intersect(left, right);
    CHECK(both.dim() == 1);
    CHECK(contains(both, to_coords(p1, 2)));
    CHECK(!contains(both, to_coords(q1, 2)));

    // Commutative, associative, idempotent on canonical subspaces.
    CHECK(subspace_equal(intersect(left, right), intersect(right, left)));
    CHECK(subspace_equal(intersect(both, left), both));
    GradedSubspace third = subspace_from_polys(std::vector<VecPoly>{p1, p2, q1}, 2, 2);
    CHECK(subspace_equal(intersect(intersect(left, right), third), intersect(left, intersect(right, third))));

    CHECK_THROWS(intersect(left, subspace_from_polys(std::vector<VecPoly>{p1}, 2, 3)));
}

TEST_CASE("hilbert basis of the sigma-twisted invariants") {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});

    for (int n2 : {1, 2}) {
        auto u = golden_basic_invariants(1, n2);
        auto basis = hilbert_basis_sigma(G, u, 2 * (1 + n2) + 2);
        // Expected: {x1, |z1|^2, |z2|^2, Re}; Im^2 = |z1|^2|z2|^2 - Re^2 is pruned.
        REQUIRE(basis.size() == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(std::count(basis.begin(), basis.end(), u[i]) == 1);
    }

    auto single = hilbert_basis_sigma(G, {x(6, 0)}, 4);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == x(6, 0));

    CHECK_THROWS_AS(hilbert_basis_sigma(FiniteSignedGroup::trivial(2), {x(2, 0)}, 4), std::domain_error);
}

TEST_CASE("product generators across variable blocks") {
    // R-block data on (x1, x2), S^1-block data on the two complex pairs.
    std::vector<ScalarPoly> inv_v{x(6, 0)};
    VecPoly gen1(6), gen2(6);
    gen1.comp(0) = x(6, 0);
    gen1.comp(1) = x(6, 1);
    gen2.comp(1) = ScalarPoly::constant(6, rat(1));
    std::vector<VecPoly> eqv_v{gen1, gen2};

    auto u = golden_basic_invariants(1, 1);
    std::vector<ScalarPoly> inv_w{u[1], u[2], u[3], u[4]};
    std::vector<VecPoly> eqv_w = s1_block_gens_11();

    ProductGenerators prod = product_generators(6, {0, 2}, inv_v, eqv_v, {2, 4}, inv_w, eqv_w);
    CHECK(prod.invariants.size() == 5);
    CHECK(prod.equivariants.size() == 10);

    // The padded generators generate the S-equivariants: the module slice
    // matches ker Ad_{L^t} degree by degree.
    LinearPart L = build_resonant_L(1, 1, ResonanceMode::resonant, 4);
    for (int k : {1, 2, 3}) {
        GradedSubspace mod = module_slice(prod.equivariants, prod.invariants, 6, k);
        CHECK(subspace_equal(mod, s_equivariants_deg(L, k)));
    }

    // Empty second factor: first factor unchanged.
    ProductGenerators solo = product_generators(6, {0, 2}, inv_v, eqv_v, {2, 0}, {}, {});
    CHECK(solo.invariants.size() == 1);
    CHECK(solo.equivariants.size() == 2);

    // Overlapping blocks rejected; off-block variables rejected.
    CHECK_THROWS_AS(product_generators(6, {0, 3}, inv_v, eqv_v, {2, 4}, inv_w, eqv_w), std::invalid_argument);
    CHECK_THROWS_AS(product_generators(6, {0, 2}, {u[1]}, eqv_v, {2, 4}, inv_w, eqv_w), std::invalid_argument);
}

TEST_CASE("module slices") {
    // Generators {(x1, x2), (0, 1)} over <x1>: degree-k slice has dimension 2.
    VecPoly gen1(2), gen2(2);
    gen1.comp(0) = x(2, 0);
    gen1.comp(1) = x(2, 1);
    gen2.comp(1) = ScalarPoly::constant(2, rat(1));
    std::vector<ScalarPoly> inv{x(2, 0)};

    GradedSubspace s2 = module_slice({gen1, gen2}, inv, 2, 2);
    VecPoly m1(2), m2(2);
    m1.comp(0) = x(2, 0) * x(2, 0);
    m1.comp(1) = x(2, 0) * x(2, 1);
    m2.comp(1) = x(2, 0) * x(2, 0);
    CHECK(subspace_equal(s2, subspace_from_polys(std::vector<VecPoly>{m1, m2}, 2, 2)));
    CHECK(s2.dim() == 2);

    GradedSubspace s1 = module_slice({VecPoly::identity(2)}, {}, 2, 1);
    CHECK(s1.dim() == 1);
    CHECK(contains(s1, to_coords(VecPoly::identity(2), 1)));

    // Monotone in the generator list.
    GradedSubspace bigger = module_slice({gen1, gen2, VecPoly::identity(2)}, inv, 2, 2);
    CHECK(bigger.dim() >= s2.dim());
    CHECK(contains_all(bigger, s2.basis));
}
