#ifndef REVNF_NORMALFORM_HPP
#define REVNF_NORMALFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "revnf/homological.hpp"
#include "revnf/spaces.hpp"

namespace revnf {

struct ProblemSpec {
    int n = 0;
    LinearPart L;
    FiniteSignedGroup group;
    int kmax = 2;
    std::optional<VecPoly> field;  // X with X(0) = 0 and linear part L
};

// Whether p satisfies p(gamma x) = sigma(gamma) gamma p(x) for every
// generator, i.e. lies in the reversible-equivariants (equivariants when the
// sign character is trivial).
bool is_rev_equivariant(const FiniteSignedGroup& G, const VecPoly& p, std::string* violator = nullptr);

// Throws when a ProblemSpec invariant fails: field constant term, linear
// part mismatch, incompatible (L, group), or field not reversible-
// equivariant through degree kmax.
void validate_problem_spec(const ProblemSpec& spec);

// The normal-form complement at degree k:
// ker Ad_{L^t}^k ∩ (reversible-equivariants of G), or the classical
// equivariant complement ker Ad_{L^t}^k ∩ (equivariants of G) when the sign
// character is trivial. Requires (L, G) compatible.
GradedSubspace complement_deg(const LinearPart& L, const FiniteSignedGroup& G, int k);

struct Thm44Report {
    int k = 0;
    int dim_rev = 0;         // dim of the degree-k reversible-equivariants
    int dim_complement = 0;  // dim of the complement slice
    int dim_image = 0;       // dim Ad_L(equivariants slice)
    bool sum_ok = false;
    bool intersection_ok = false;
    bool containment_ok = false;
    bool pass() const { return sum_ok && intersection_ok && containment_ok; }
};

Thm44Report verify_theorem_4_4(const LinearPart& L, const FiniteSignedGroup& G, int k);

struct NormalFormStep {
    int k = 0;
    int dim_complement = 0;
    VecPoly g_k;            // retained term, in the complement
    VecPoly xi_k;           // generator of the degree-k coordinate change
    bool residual_check = false;  // X_k - Ad_L(xi_k) == g_k, exact
    NormalFormStep() : g_k(1), xi_k(1) {}
};

// One homological step: splits the degree-k part of the field as
// g_k + Ad_L(xi_k) with g_k in the complement and xi_k equivariant, then
// rewrites the field in the new coordinates x = y + xi_k(y), truncated at
// kmax. Underdetermined xi_k is resolved by the reduced-echelon particular
// solution with free variables zero.
struct StepOutcome {
    NormalFormStep step;
    VecPoly transformed;
    StepOutcome() : transformed(1) {}
};

StepOutcome normalize_step(const VecPoly& field, const LinearPart& L, const FiniteSignedGroup& G, int k, int kmax);

// Field rewritten in coordinates x = y + xi(y): the unique Y with
// (D(I+xi)) Y = X ∘ (I+xi), truncated at kmax.
VecPoly transform_field(const VecPoly& field, const VecPoly& xi, int kmax);

struct NormalFormResult {
    ProblemSpec spec;
    std::vector<NormalFormStep> steps;  // k = 2..kmax
    VecPoly normal_field;
    VecPoly total_change;  // accumulated x = Phi(y), truncated composition
    NormalFormResult() : normal_field(1), total_change(1) {}
};

NormalFormResult normal_form(const ProblemSpec& spec);

}  // namespace revnf

#endif
