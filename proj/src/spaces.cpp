#include "revnf/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace revnf {

SparseMat odot_matrix(const SignedElement& g, int n, int k) {
    auto basis = monomial_basis(n, k);
    int d = static_cast<int>(basis.size());
    std::vector<std::tuple<int, int, Rational>> trips;
    for (int j = 0; j < d; ++j) {
        ScalarPoly image = act_odot(g, ScalarPoly::term(n, basis[j], Rational(1)));
        for (const auto& [m, c] : image.terms()) trips.emplace_back(monomial_rank(m), j, c);
    }
    return SparseMat::from_triplets(d, d, trips);
}

SparseMat star_matrix(const SignedElement& g, int n, int k) {
    int block = static_cast<int>(scalar_slice_dim(n, k));
    int d = n * block;
    RatMat inv = g.matrix.inverse();
    auto basis = monomial_basis(n, k);
    std::vector<std::tuple<int, int, Rational>> trips;
    for (int comp = 0; comp < n; ++comp) {
        for (int j = 0; j < block; ++j) {
            int col = comp * block + j;
            // gamma ⋆ (m e_comp) = (m ∘ gamma) · (gamma^{-1} e_comp)
            ScalarPoly image = precompose_linear(ScalarPoly::term(n, basis[j], Rational(1)), g.matrix);
            for (int r = 0; r < n; ++r) {
                const Rational& w = inv.at(r, comp);
                if (is_zero(w)) continue;
                for (const auto& [m, c] : image.terms()) {
                    Rational v = c * w;
                    trips.emplace_back(r * block + monomial_rank(m), col, std::move(v));
                }
            }
        }
    }
    return SparseMat::from_triplets(d, d, trips);
}

namespace {

// Common kernel over the generators of (action(g) - multiple(g) * I).
GradedSubspace constraint_kernel(const FiniteSignedGroup& G, int k, SpaceKind kind, bool signed_multiple) {
    int n = G.dim();
    int d = kind == SpaceKind::scalar ? static_cast<int>(scalar_slice_dim(n, k))
                                      : static_cast<int>(vector_slice_dim(n, k));
    SparseMat stacked(0, d);
    for (const auto& g : G.generators()) {
        SparseMat act = kind == SpaceKind::scalar ? odot_matrix(g, n, k) : star_matrix(g, n, k);
        Rational mult(signed_multiple ? g.sign : 1);
        for (int i = 0; i < d; ++i) {
            SparseVec row = sv_axpy(act.row(i), Rational(-1), SparseVec{{i, mult}});
            if (!row.empty()) stacked.append_row(std::move(row));
        }
    }
    GradedSubspace s;
    s.kind = kind;
    s.n = n;
    s.k = k;
    s.basis = nullspace(stacked);
    return s;
}

}  // namespace

GradedSubspace invariants_deg(const FiniteSignedGroup& G, int k) {
    return constraint_kernel(G, k, SpaceKind::scalar, false);
}

GradedSubspace anti_invariants_deg(const FiniteSignedGroup& G, int k) {
    return constraint_kernel(G, k, SpaceKind::scalar, true);
}

GradedSubspace equivariants_deg(const FiniteSignedGroup& G, int k) {
    return constraint_kernel(G, k, SpaceKind::vector, false);
}

GradedSubspace rev_equivariants_deg(const FiniteSignedGroup& G, int k) {
    return constraint_kernel(G, k, SpaceKind::vector, true);
}

FiniteSignedGroup plus_subgroup(const FiniteSignedGroup& G) {
    std::vector<SignedElement> gens;
    for (const auto& e : G.elements())
        if (e.sign > 0) gens.push_back(e);
    return close_group(gens, G.order());
}

DecomposeReport decompose_plus_check(const FiniteSignedGroup& G, int k) {
    if (!G.has_reversing()) throw std::domain_error("decompose_plus_check requires a nontrivial sign character");
    FiniteSignedGroup plus = plus_subgroup(G);
    DecomposeReport r;
    r.k = k;
    GradedSubspace ps = invariants_deg(plus, k);
    GradedSubspace inv = invariants_deg(G, k);
    GradedSubspace anti = anti_invariants_deg(G, k);
    r.dim_plus_scalar = ps.dim();
    r.dim_inv = inv.dim();
    r.dim_anti = anti.dim();
    r.scalar_pass = (r.dim_plus_scalar == r.dim_inv + r.dim_anti) && zero_intersection(inv, anti) &&
                    subspace_equal(subspace_sum(inv, anti), ps);
    GradedSubspace pv = equivariants_deg(plus, k);
    GradedSubspace eqv = equivariants_deg(G, k);
    GradedSubspace rev = rev_equivariants_deg(G, k);
    r.dim_plus_vector = pv.dim();
    r.dim_eqv = eqv.dim();
    r.dim_rev = rev.dim();
    r.vector_pass = (r.dim_plus_vector == r.dim_eqv + r.dim_rev) && zero_intersection(eqv, rev) &&
                    subspace_equal(subspace_sum(eqv, rev), pv);
    return r;
}

namespace {

// Deterministic ordering of polynomials: by degree, then by the term
// sequence in the global monomial order.
bool poly_order_less(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    MonomialOrder less;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first != ib->first) return less(ia->first, ib->first);
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
        ++ia;
        ++ib;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

void enumerate_products(const std::vector<ScalarPoly>& gens, int from, int remaining, const ScalarPoly& acc,
                        std::vector<ScalarPoly>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int i = from; i < static_cast<int>(gens.size()); ++i) {
        int d = gens[i].degree();
        if (d <= 0 || d > remaining) continue;
        enumerate_products(gens, i, remaining - d, acc * gens[i], out);
    }
}

}  // namespace

std::vector<ScalarPoly> invariant_products(const std::vector<ScalarPoly>& gens, int n, int d) {
    std::vector<ScalarPoly> out;
    enumerate_products(gens, 0, d, ScalarPoly::constant(n, Rational(1)), out);
    return out;
}

GradedSubspace algebra_slice(const std::vector<ScalarPoly>& gens, int n, int d) {
    return subspace_from_polys(invariant_products(gens, n, d), n, d);
}

std::vector<ScalarPoly> hilbert_basis_sigma(const FiniteSignedGroup& G, const std::vector<ScalarPoly>& u_list,
                                            int dmax) {
    if (!G.has_reversing()) throw std::domain_error("hilbert_basis_sigma requires a nontrivial sign character");
    int n = G.dim();
    std::vector<ScalarPoly> candidates;
    std::vector<ScalarPoly> s_parts;
    for (const auto& u : u_list) {
        if (!u.is_homogeneous(u.degree()))
            throw std::invalid_argument("hilbert_basis_sigma expects homogeneous generators");
        ScalarPoly r = reynolds_R(G, u);  // checks Gamma_+-invariance
        if (!r.is_zero()) candidates.push_back(r);
        s_parts.push_back(reynolds_S(G, u));
    }
    for (std::size_t i = 0; i < s_parts.size(); ++i)
        for (std::size_t j = i; j < s_parts.size(); ++j) {
            ScalarPoly prod = s_parts[i] * s_parts[j];
            if (!prod.is_zero()) candidates.push_back(prod);
        }
    std::sort(candidates.begin(), candidates.end(), poly_order_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<ScalarPoly> retained;
    for (const auto& c : candidates) {
        int d = c.degree();
        if (d <= dmax) {
            GradedSubspace span = algebra_slice(retained, n, d);
            if (contains(span, to_coords(c, d))) continue;
        }
        retained.push_back(c);
    }
    return retained;
}

ProductGenerators product_generators(int n, const VarBlock& block_v, const std::vector<ScalarPoly>& inv_v,
                                     const std::vector<VecPoly>& eqv_v, const VarBlock& block_w,
                                     const std::vector<ScalarPoly>& inv_w, const std::vector<VecPoly>& eqv_w) {
    auto in_block = [](const VarBlock& b, int i) { return i >= b.offset && i < b.offset + b.width; };
    if (block_v.offset < 0 || block_w.offset < 0 || block_v.width < 0 || block_w.width < 0 ||
        block_v.offset + block_v.width > n || block_w.offset + block_w.width > n)
        throw std::invalid_argument("variable block outside the ambient space");
    for (int i = 0; i < n; ++i)
        if (in_block(block_v, i) && in_block(block_w, i))
            throw std::invalid_argument("variable blocks overlap");

    auto check_scalar = [&](const ScalarPoly& p, const VarBlock& b) {
        if (p.vars() != n) throw std::invalid_argument("generator not defined on the ambient space");
        for (const auto& [m, c] : p.terms())
            for (int i = 0; i < n; ++i)
                if (m.exp(i) > 0 && !in_block(b, i))
                    throw std::invalid_argument("scalar generator uses variables outside its block");
    };
    auto check_vector = [&](const VecPoly& p, const VarBlock& b) {
        if (p.vars() != n) throw std::invalid_argument("generator not defined on the ambient space");
        for (int i = 0; i < n; ++i) {
            if (!in_block(b, i) && !p.comp(i).is_zero())
                throw std::invalid_argument("vector generator has components outside its block");
            check_scalar(p.comp(i), b);
        }
    };
    for (const auto& p : inv_v) check_scalar(p, block_v);
    for (const auto& p : inv_w) check_scalar(p, block_w);
    for (const auto& p : eqv_v) check_vector(p, block_v);
    for (const auto& p : eqv_w) check_vector(p, block_w);

    ProductGenerators out;
    out.invariants = inv_v;
    out.invariants.insert(out.invariants.end(), inv_w.begin(), inv_w.end());
    out.equivariants = eqv_v;
    out.equivariants.insert(out.equivariants.end(), eqv_w.begin(), eqv_w.end());
    return out;
}

GradedSubspace module_slice(const std::vector<VecPoly>& equivariant_gens,
                            const std::vector<ScalarPoly>& invariant_gens, int n, int k) {
    std::vector<VecPoly> elements;
    for (const auto& g : equivariant_gens) {
        if (g.is_zero()) continue;
        int dg = g.degree();
        if (!g.is_homogeneous(dg)) throw std::invalid_argument("module_slice expects homogeneous generators");
        if (dg > k) continue;
        for (const auto& m : invariant_products(invariant_gens, n, k - dg)) {
            VecPoly scaled(n);
            for (int i = 0; i < n; ++i) scaled.comp(i) = g.comp(i) * m;
            elements.push_back(std::move(scaled));
        }
    }
    if (elements.empty()) return zero_slice(SpaceKind::vector, n, k);
    return subspace_from_polys(elements, n, k);
}

}  // namespace revnf
