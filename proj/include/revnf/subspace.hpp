#ifndef REVNF_SUBSPACE_HPP
#define REVNF_SUBSPACE_HPP

#include <string>
#include <vector>

#include "revnf/linalg.hpp"
#include "revnf/poly.hpp"

namespace revnf {

enum class SpaceKind { scalar, vector };

// Degree-k subspace of scalar or vector polynomials, stored as the unique
// reduced row echelon basis of its coordinate vectors. Equal subspaces have
// identical stored matrices.
struct GradedSubspace {
    SpaceKind kind = SpaceKind::scalar;
    int n = 0;
    int k = 0;
    SparseMat basis;  // rows = basis vectors, canonical

    int dim() const { return basis.nrows(); }
    long long ambient_dim() const {
        return kind == SpaceKind::scalar ? static_cast<long long>(scalar_slice_dim(n, k)) : vector_slice_dim(n, k);
    }
};

GradedSubspace make_subspace(SpaceKind kind, int n, int k, const SparseMat& rows);
GradedSubspace full_slice(SpaceKind kind, int n, int k);
GradedSubspace zero_slice(SpaceKind kind, int n, int k);

GradedSubspace subspace_from_polys(const std::vector<ScalarPoly>& ps, int n, int k);
GradedSubspace subspace_from_polys(const std::vector<VecPoly>& ps, int n, int k);

std::vector<ScalarPoly> scalar_basis_polys(const GradedSubspace& s);
std::vector<VecPoly> vector_basis_polys(const GradedSubspace& s);

bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b);

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b);

// Remainder of v after eliminating the basis pivots; zero iff v lies in s.
SparseVec reduce_against(const GradedSubspace& s, SparseVec v);
bool contains(const GradedSubspace& s, const SparseVec& v);
bool contains_all(const GradedSubspace& s, const SparseMat& rows);

// dim(span(a) ∩ span(b)) == 0, checked via rank additivity.
bool zero_intersection(const GradedSubspace& a, const GradedSubspace& b);

}  // namespace revnf

#endif
