#include "revnf/subspace.hpp"

#include <stdexcept>

namespace revnf {

namespace {

void check_same_slice(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.kind != b.kind || a.n != b.n || a.k != b.k)
        throw std::invalid_argument("subspace slice mismatch (kind, variables or degree differ)");
}

}  // namespace

GradedSubspace make_subspace(SpaceKind kind, int n, int k, const SparseMat& rows) {
    GradedSubspace s;
    s.kind = kind;
    s.n = n;
    s.k = k;
    if (rows.ncols() != (kind == SpaceKind::scalar ? static_cast<long long>(scalar_slice_dim(n, k))
                                                   : vector_slice_dim(n, k)))
        throw std::invalid_argument("coordinate width does not match the slice");
    s.basis = rref(rows).mat;
    return s;
}

GradedSubspace full_slice(SpaceKind kind, int n, int k) {
    long long d = kind == SpaceKind::scalar ? static_cast<long long>(scalar_slice_dim(n, k)) : vector_slice_dim(n, k);
    SparseMat rows(static_cast<int>(d), static_cast<int>(d));
    for (int i = 0; i < d; ++i) rows.set_row(i, sv_unit(i));
    GradedSubspace s;
    s.kind = kind;
    s.n = n;
    s.k = k;
    s.basis = std::move(rows);
    return s;
}

GradedSubspace zero_slice(SpaceKind kind, int n, int k) {
    GradedSubspace s;
    s.kind = kind;
    s.n = n;
    s.k = k;
    long long d = kind == SpaceKind::scalar ? static_cast<long long>(scalar_slice_dim(n, k)) : vector_slice_dim(n, k);
    s.basis = SparseMat(0, static_cast<int>(d));
    return s;
}

GradedSubspace subspace_from_polys(const std::vector<ScalarPoly>& ps, int n, int k) {
    SparseMat rows(0, static_cast<int>(scalar_slice_dim(n, k)));
    for (const auto& p : ps) rows.append_row(to_coords(p, k));
    return make_subspace(SpaceKind::scalar, n, k, rows);
}

GradedSubspace subspace_from_polys(const std::vector<VecPoly>& ps, int n, int k) {
    SparseMat rows(0, static_cast<int>(vector_slice_dim(n, k)));
    for (const auto& p : ps) rows.append_row(to_coords(p, k));
    return make_subspace(SpaceKind::vector, n, k, rows);
}

std::vector<ScalarPoly> scalar_basis_polys(const GradedSubspace& s) {
    if (s.kind != SpaceKind::scalar) throw std::invalid_argument("scalar basis of a vector subspace");
    std::vector<ScalarPoly> out;
    out.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) out.push_back(scalar_from_coords(s.basis.row(i), s.n, s.k));
    return out;
}

std::vector<VecPoly> vector_basis_polys(const GradedSubspace& s) {
    if (s.kind != SpaceKind::vector) throw std::invalid_argument("vector basis of a scalar subspace");
    std::vector<VecPoly> out;
    out.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) out.push_back(vec_from_coords(s.basis.row(i), s.n, s.k));
    return out;
}

bool subspace_equal(const GradedSubspace& a, const GradedSubspace& b) {
    return a.kind == b.kind && a.n == b.n && a.k == b.k && a.basis == b.basis;
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_slice(a, b);
    if (a.dim() == 0 || b.dim() == 0) return zero_slice(a.kind, a.n, a.k);
    // x in both spans iff x = u A = v B; kernel of [A^T | -B^T] gives (u, v).
    SparseMat at = a.basis.transpose();
    SparseMat bt = b.basis.transpose();
    for (int i = 0; i < bt.nrows(); ++i) bt.set_row(i, sv_scale(bt.row(i), Rational(-1)));
    SparseMat ker = nullspace(hstack(at, bt));
    SparseMat u = column_slice(ker, 0, a.dim());
    return make_subspace(a.kind, a.n, a.k, u.multiply(a.basis));
}

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_slice(a, b);
    return make_subspace(a.kind, a.n, a.k, vstack(a.basis, b.basis));
}

SparseVec reduce_against(const GradedSubspace& s, SparseVec v) {
    // Canonical basis rows have unit leading entries at distinct pivots.
    for (int i = 0; i < s.dim(); ++i) {
        const SparseVec& row = s.basis.row(i);
        Rational c = sv_get(v, row.front().index);
        if (!is_zero(c)) {
            Rational neg = -c;
            v = sv_axpy(v, neg, row);
        }
    }
    return v;
}

bool contains(const GradedSubspace& s, const SparseVec& v) { return reduce_against(s, v).empty(); }

bool contains_all(const GradedSubspace& s, const SparseMat& rows) {
    for (int i = 0; i < rows.nrows(); ++i)
        if (!contains(s, rows.row(i))) return false;
    return true;
}

bool zero_intersection(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_slice(a, b);
    return rank_of(vstack(a.basis, b.basis)) == a.dim() + b.dim();
}

}  // namespace revnf
