#include "revnf/verify.hpp"

#include <random>

#include "revnf/parallel.hpp"

namespace revnf {

VecPoly random_homogeneous(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto basis = monomial_basis(n, k);
    VecPoly p(n);
    for (int comp = 0; comp < n; ++comp)
        for (const auto& m : basis) {
            // Keep roughly a third of the slots, coefficients in [-9, 9]/d.
            if (rng() % 3 != 0) continue;
            long num = static_cast<long>(rng() % 19) - 9;
            long den = static_cast<long>(rng() % 4) + 1;
            if (num != 0) p.comp(comp).add_term(m, rat(num, den));
        }
    return p;
}

namespace {

VecPoly random_equivariant(const FiniteSignedGroup& G, int n, int k, std::uint64_t seed) {
    return average_star(G, random_homogeneous(n, k, seed));
}

GradedSubspace apply_pi_to_span(const FiniteSignedGroup& G, const GradedSubspace& s) {
    SparseMat rows(0, static_cast<int>(s.ambient_dim()));
    for (int i = 0; i < s.dim(); ++i)
        rows.append_row(to_coords(project_pi(G, vec_from_coords(s.basis.row(i), s.n, s.k)), s.k));
    return make_subspace(SpaceKind::vector, s.n, s.k, rows);
}

GradedSubspace image_of_subspace(const LinearPart& L, const GradedSubspace& s) {
    return make_subspace(SpaceKind::vector, s.n, s.k, s.basis.multiply(ad_matrix(L, s.k).transpose()));
}

}  // namespace

VerifyReport run_elphick(const LinearPart& L, int k_from, int k_to, int jobs) {
    VerifyReport report;
    report.suite = "elphick";
    int count = std::max(0, k_to - k_from + 1);
    report.lines.resize(count);
    parallel_for(count, jobs, [&](int i) {
        int k = k_from + i;
        GradedSubspace ker = s_equivariants_deg(L, k);
        GradedSubspace img = image_deg(L, k);
        long long full = vector_slice_dim(L.dim(), k);
        bool dims_ok = ker.dim() + img.dim() == full;
        bool inter_ok = zero_intersection(ker, img);
        CheckLine line;
        line.name = "elphick-decomposition";
        line.k = k;
        line.data = {{"dim_full", full},
                     {"dim_kernel", ker.dim()},
                     {"dim_image", img.dim()}};
        line.pass = dims_ok && inter_ok;
        report.lines[i] = std::move(line);
    });
    return report;
}

VerifyReport run_thm44(const LinearPart& L, const FiniteSignedGroup& G, int k_from, int k_to, int jobs) {
    VerifyReport report;
    report.suite = "thm-4-4";
    int count = std::max(0, k_to - k_from + 1);
    report.lines.resize(count);
    parallel_for(count, jobs, [&](int i) {
        int k = k_from + i;
        Thm44Report r = verify_theorem_4_4(L, G, k);
        CheckLine line;
        line.name = "thm-4-4";
        line.k = k;
        line.data = {{"dim_rev_equivariants", r.dim_rev},
                     {"dim_complement", r.dim_complement},
                     {"dim_image_on_equivariants", r.dim_image}};
        line.pass = r.pass();
        report.lines[i] = std::move(line);
    });
    return report;
}

VerifyReport run_lemmas(const LinearPart& L, const FiniteSignedGroup& G, int k_from, int k_to, int samples,
                        std::uint64_t seed, int jobs) {
    VerifyReport report;
    report.suite = "lemmas";
    int n = G.dim();
    FiniteSignedGroup plus = plus_subgroup(G);
    int degrees = std::max(1, k_to - k_from + 1);

    auto degree_of = [&](int i) { return k_from + (i % degrees); };

    // Module interchange: Ad_L maps P(Gamma) into Q(Gamma) and back.
    CheckLine interchange;
    interchange.name = "adl-interchanges-modules";
    interchange.pass = true;
    for (int i = 0; i < samples; ++i) {
        int k = degree_of(i);
        VecPoly p = random_equivariant(G, n, k, seed + 2 * i);
        VecPoly q = project_pi(G, random_homogeneous(n, k, seed + 2 * i + 1));
        bool ok_p = is_rev_equivariant(G, ad(L, p));  // Ad_L(P(Gamma)) ⊆ Q(Gamma)
        VecPoly adq = ad(L, q);
        bool ok_q = average_star(G, adq) == adq;  // Ad_L(Q(Gamma)) ⊆ P(Gamma)
        if (!(ok_p && ok_q)) interchange.pass = false;
    }
    interchange.data = {{"samples", samples}};
    report.lines.push_back(interchange);

    // Intertwining S Ad_L = Ad_L R on the Gamma_+-equivariants.
    CheckLine intertwine;
    intertwine.name = "s-adl-equals-adl-r";
    intertwine.pass = true;
    for (int i = 0; i < samples; ++i) {
        int k = degree_of(i);
        VecPoly p = random_equivariant(plus, n, k, seed + 7919 * (i + 1));
        if (vec_S(G, ad(L, p)) != ad(L, vec_R(G, p))) intertwine.pass = false;
    }
    intertwine.data = {{"samples", samples}};
    report.lines.push_back(intertwine);

    // Ad_L(gamma ⋆ p) = sigma(gamma) gamma ⋆ Ad_L(p) for every element.
    CheckLine twisted;
    twisted.name = "adl-star-twist";
    twisted.pass = true;
    for (int i = 0; i < samples; ++i) {
        int k = degree_of(i);
        VecPoly p = random_homogeneous(n, k, seed + 104729 * (i + 1));
        VecPoly adp = ad(L, p);
        for (const auto& g : G.elements()) {
            VecPoly lhs = ad(L, act_star(g, p));
            VecPoly rhs = act_star(g, adp) * Rational(g.sign);
            if (lhs != rhs) twisted.pass = false;
        }
    }
    twisted.data = {{"samples", samples}};
    report.lines.push_back(twisted);

    // pi(Ad_L(P^k)) = Ad_L(P^k(Gamma)) per degree.
    int count = std::max(0, k_to - k_from + 1);
    std::vector<CheckLine> image_lines(count);
    parallel_for(count, jobs, [&](int i) {
        int k = k_from + i;
        GradedSubspace lhs = apply_pi_to_span(G, image_deg(L, k));
        GradedSubspace rhs = image_of_subspace(L, equivariants_deg(G, k));
        CheckLine line;
        line.name = "pi-image-identity";
        line.k = k;
        line.data = {{"dim_lhs", lhs.dim()}, {"dim_rhs", rhs.dim()}};
        line.pass = subspace_equal(lhs, rhs);
        image_lines[i] = std::move(line);
    });
    for (auto& l : image_lines) report.lines.push_back(std::move(l));
    return report;
}

VerifyReport run_pi(const LinearPart& L, const FiniteSignedGroup& G, int k_from, int k_to, int samples,
                    std::uint64_t seed, int jobs) {
    VerifyReport report;
    report.suite = "pi";
    int n = G.dim();
    int degrees = std::max(1, k_to - k_from + 1);

    CheckLine proj;
    proj.name = "pi-projection";
    proj.pass = true;
    CheckLine delta_free;
    delta_free.name = "pi-delta-independence";
    delta_free.pass = true;
    auto reversing = G.reversing_elements();
    for (int i = 0; i < samples; ++i) {
        int k = k_from + (i % degrees);
        VecPoly p = random_homogeneous(n, k, seed + 31 * (i + 1));
        VecPoly pi_p = project_pi(G, p);
        if (!pi_p.is_zero() && !pi_p.is_homogeneous(k)) proj.pass = false;  // grading preserved
        if (!is_rev_equivariant(G, pi_p)) proj.pass = false;                // image in Q(Gamma)
        if (project_pi(G, pi_p) != pi_p) proj.pass = false;                 // idempotent
        for (const auto& d : reversing)
            if (project_pi_with(G, d, p) != pi_p) delta_free.pass = false;
    }
    proj.data = {{"samples", samples}};
    delta_free.data = {{"samples", samples}, {"reversing_elements", static_cast<long long>(reversing.size())}};
    report.lines.push_back(proj);
    report.lines.push_back(delta_free);

    // Fixed points: pi restricted to the reversible-equivariants is the
    // identity (basis columns of each degree slice).
    CheckLine fixed;
    fixed.name = "pi-fixes-rev-equivariants";
    fixed.pass = true;
    for (int k = k_from; k <= k_to; ++k)
        for (const auto& q : vector_basis_polys(rev_equivariants_deg(G, k)))
            if (project_pi(G, q) != q) fixed.pass = false;
    report.lines.push_back(fixed);

    // pi maps the S-equivariant slice onto the complement slice.
    int count = std::max(0, k_to - k_from + 1);
    std::vector<CheckLine> onto_lines(count);
    parallel_for(count, jobs, [&](int i) {
        int k = k_from + i;
        GradedSubspace lhs = apply_pi_to_span(G, s_equivariants_deg(L, k));
        GradedSubspace rhs = complement_deg(L, G, k);
        CheckLine line;
        line.name = "pi-onto-complement";
        line.k = k;
        line.data = {{"dim_lhs", lhs.dim()}, {"dim_rhs", rhs.dim()}};
        line.pass = subspace_equal(lhs, rhs);
        onto_lines[i] = std::move(line);
    });
    for (auto& l : onto_lines) report.lines.push_back(std::move(l));
    return report;
}

VerifyReport run_decompose_plus(const FiniteSignedGroup& G, int k_from, int k_to, int jobs) {
    VerifyReport report;
    report.suite = "decompose-plus";
    int count = std::max(0, k_to - k_from + 1);
    report.lines.resize(count);
    parallel_for(count, jobs, [&](int i) {
        int k = k_from + i;
        DecomposeReport r = decompose_plus_check(G, k);
        CheckLine line;
        line.name = "plus-decomposition";
        line.k = k;
        line.data = {{"dim_scalar_plus", r.dim_plus_scalar}, {"dim_invariants", r.dim_inv},
                     {"dim_anti_invariants", r.dim_anti},   {"dim_vector_plus", r.dim_plus_vector},
                     {"dim_equivariants", r.dim_eqv},       {"dim_rev_equivariants", r.dim_rev}};
        line.pass = r.pass();
        report.lines[i] = std::move(line);
    });
    return report;
}

}  // namespace revnf
