#ifndef REVNF_SPACES_HPP
#define REVNF_SPACES_HPP

#include <string>
#include <vector>

#include "revnf/group.hpp"
#include "revnf/subspace.hpp"

namespace revnf {

// Matrix of the ⊙ action of g on the degree-k scalar slice (column j is the
// image of the j-th monomial) and of the ⋆ action on the vector slice.
SparseMat odot_matrix(const SignedElement& g, int n, int k);
SparseMat star_matrix(const SignedElement& g, int n, int k);

// Degree-k slices of the four spaces, computed as the common kernel over the
// recorded generators of (action - required multiple * identity).
GradedSubspace invariants_deg(const FiniteSignedGroup& G, int k);
GradedSubspace anti_invariants_deg(const FiniteSignedGroup& G, int k);
GradedSubspace equivariants_deg(const FiniteSignedGroup& G, int k);
GradedSubspace rev_equivariants_deg(const FiniteSignedGroup& G, int k);

struct DecomposeReport {
    int k = 0;
    int dim_plus_scalar = 0, dim_inv = 0, dim_anti = 0;
    int dim_plus_vector = 0, dim_eqv = 0, dim_rev = 0;
    bool scalar_pass = false, vector_pass = false;
    bool pass() const { return scalar_pass && vector_pass; }
};

// Checks P^k(Gamma_+) = P^k(Gamma) ⊕ Q^k(Gamma) and the vector analogue.
DecomposeReport decompose_plus_check(const FiniteSignedGroup& G, int k);

// The subgroup of symmetries as a group of its own (trivial sign character).
FiniteSignedGroup plus_subgroup(const FiniteSignedGroup& G);

// Candidate set {R(u_i)} ∪ {S(u_i) S(u_j), i <= j} with zero members dropped
// and degree-wise redundant members pruned greedily (increasing degree, then
// term order) against the algebra span of the retained ones, up to dmax.
// All u_i must be homogeneous and Gamma_+-invariant.
std::vector<ScalarPoly> hilbert_basis_sigma(const FiniteSignedGroup& G, const std::vector<ScalarPoly>& u_list,
                                            int dmax);

// Degree-d slice of the algebra generated by homogeneous scalar generators:
// the span of all products with total degree exactly d (empty product = 1).
GradedSubspace algebra_slice(const std::vector<ScalarPoly>& gens, int n, int d);

// Variable block of a factor in a product of group actions.
struct VarBlock {
    int offset = 0;
    int width = 0;
};

struct ProductGenerators {
    std::vector<ScalarPoly> invariants;
    std::vector<VecPoly> equivariants;
};

// Generators of the invariants/equivariants of a product action from the
// generators of the factors. All polynomials live in the full space of n
// variables; factor data must be supported on its own block (scalar
// generators depend only on block variables, vector generators additionally
// vanish outside the block). Blocks must not overlap.
ProductGenerators product_generators(int n, const VarBlock& block_v, const std::vector<ScalarPoly>& inv_v,
                                     const std::vector<VecPoly>& eqv_v, const VarBlock& block_w,
                                     const std::vector<ScalarPoly>& inv_w, const std::vector<VecPoly>& eqv_w);

// Degree-k slice of the module generated by the (homogeneous) equivariant
// generators over the algebra of the (homogeneous) invariant generators.
GradedSubspace module_slice(const std::vector<VecPoly>& equivariant_gens,
                            const std::vector<ScalarPoly>& invariant_gens, int n, int k);

// All products of the given homogeneous scalar polynomials with total degree
// exactly d, each product reduced to one representative per multiset.
std::vector<ScalarPoly> invariant_products(const std::vector<ScalarPoly>& gens, int n, int d);

}  // namespace revnf

#endif
