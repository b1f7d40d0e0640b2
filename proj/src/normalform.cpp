#include "revnf/normalform.hpp"

#include <stdexcept>

namespace revnf {

bool is_rev_equivariant(const FiniteSignedGroup& G, const VecPoly& p, std::string* violator) {
    for (const auto& g : G.generators()) {
        VecPoly lhs = act_star(g, p);
        VecPoly rhs = g.sign > 0 ? p : -p;
        if (lhs != rhs) {
            if (violator) *violator = g.matrix.str();
            return false;
        }
    }
    return true;
}

void validate_problem_spec(const ProblemSpec& spec) {
    if (spec.n != spec.L.dim() || spec.n != spec.group.dim())
        throw std::invalid_argument("dimension mismatch between space, linear part and group");
    if (spec.kmax < 2) throw std::invalid_argument("degree_max must be at least 2");
    CompatibilityReport compat = validate_compatibility(spec.L, spec.group);
    if (!compat.pass())
        throw std::invalid_argument("linear part incompatible with the group action (" + compat.first_failure() +
                                    ")");
    if (spec.field) {
        const VecPoly& X = *spec.field;
        if (X.vars() != spec.n) throw std::invalid_argument("vector field dimension mismatch");
        if (!X.graded_part(0).is_zero()) throw std::invalid_argument("vector field must vanish at the origin");
        if (X.graded_part(1) != VecPoly::linear(spec.L.matrix))
            throw std::invalid_argument("linear part mismatch between the field and L");
        std::string who;
        if (!is_rev_equivariant(spec.group, X.truncated(spec.kmax), &who))
            throw std::invalid_argument("vector field is not reversible-equivariant; violated by " + who);
    }
}

GradedSubspace complement_deg(const LinearPart& L, const FiniteSignedGroup& G, int k) {
    CompatibilityReport compat = validate_compatibility(L, G);
    if (!compat.pass())
        throw std::invalid_argument("incompatible (L, group): " + compat.first_failure() + " fails the conjugation condition");
    GradedSubspace s_eq = s_equivariants_deg(L, k);
    GradedSubspace g_part = G.has_reversing() ? rev_equivariants_deg(G, k) : equivariants_deg(G, k);
    return intersect(s_eq, g_part);
}

Thm44Report verify_theorem_4_4(const LinearPart& L, const FiniteSignedGroup& G, int k) {
    if (!G.has_reversing()) throw std::domain_error("the reversible decomposition check requires a nontrivial sign character");
    Thm44Report r;
    r.k = k;
    GradedSubspace rev = rev_equivariants_deg(G, k);
    GradedSubspace comp = complement_deg(L, G, k);
    GradedSubspace eqv = equivariants_deg(G, k);
    SparseMat image_rows = eqv.basis.multiply(ad_matrix(L, k).transpose());
    GradedSubspace image = make_subspace(SpaceKind::vector, G.dim(), k, image_rows);
    r.dim_rev = rev.dim();
    r.dim_complement = comp.dim();
    r.dim_image = image.dim();
    r.containment_ok = contains_all(rev, comp.basis) && contains_all(rev, image.basis);
    r.intersection_ok = zero_intersection(comp, image);
    r.sum_ok = (r.dim_rev == r.dim_complement + r.dim_image) && subspace_equal(subspace_sum(comp, image), rev);
    return r;
}

VecPoly transform_field(const VecPoly& field, const VecPoly& xi, int kmax) {
    int n = field.vars();
    VecPoly phi = VecPoly::identity(n) + xi;
    VecPoly x_of_phi = compose_truncated(field.truncated(kmax), phi, kmax);
    // Y solves Y = X∘phi - (Dxi) Y; xi has valuation >= 2 so each pass
    // settles at least one more degree.
    VecPoly y = x_of_phi;
    for (int pass = 0; pass < kmax; ++pass) y = (x_of_phi - jacobian_times(xi, y)).truncated(kmax);
    return y;
}

StepOutcome normalize_step(const VecPoly& field, const LinearPart& L, const FiniteSignedGroup& G, int k, int kmax) {
    if (k < 2 || k > kmax) throw std::invalid_argument("normalization degree out of range");
    int n = field.vars();
    VecPoly target = field.graded_part(k);
    GradedSubspace comp = complement_deg(L, G, k);
    GradedSubspace eqv = equivariants_deg(G, k);

    SparseMat comp_cols = comp.basis.transpose();
    SparseMat image_cols = ad_matrix(L, k).multiply(eqv.basis.transpose());
    SparseMat system = hstack(comp_cols, image_cols);
    auto solution = solve_particular(system, to_coords(target, k));
    if (!solution)
        throw std::domain_error(
            "homological equation unsolvable at degree " + std::to_string(k) +
            ": the field is not reversible-equivariant or (L, group) is incompatible");

    SparseVec g_coords, xi_weights;
    for (const auto& e : *solution) {
        if (e.index < comp.dim())
            g_coords = sv_axpy(g_coords, e.value, comp.basis.row(e.index));
        else
            xi_weights.push_back({e.index - comp.dim(), e.value});
    }
    SparseVec xi_coords;
    for (const auto& e : xi_weights) xi_coords = sv_axpy(xi_coords, e.value, eqv.basis.row(e.index));

    StepOutcome out;
    out.step.k = k;
    out.step.dim_complement = comp.dim();
    out.step.g_k = vec_from_coords(g_coords, n, k);
    out.step.xi_k = vec_from_coords(xi_coords, n, k);
    out.step.residual_check = (target - ad(L, out.step.xi_k)) == out.step.g_k;
    out.transformed = out.step.xi_k.is_zero() ? field.truncated(kmax) : transform_field(field, out.step.xi_k, kmax);
    return out;
}

NormalFormResult normal_form(const ProblemSpec& spec) {
    validate_problem_spec(spec);
    NormalFormResult result;
    result.spec = spec;
    VecPoly current = spec.field ? spec.field->truncated(spec.kmax) : VecPoly::linear(spec.L.matrix);
    VecPoly change = VecPoly::identity(spec.n);
    for (int k = 2; k <= spec.kmax; ++k) {
        StepOutcome out = normalize_step(current, spec.L, spec.group, k, spec.kmax);
        current = out.transformed;
        if (!out.step.xi_k.is_zero())
            change = compose_truncated(change, VecPoly::identity(spec.n) + out.step.xi_k, spec.kmax);
        result.steps.push_back(std::move(out.step));
    }
    result.normal_field = current;
    result.total_change = change;
    return result;
}

}  // namespace revnf
