#include "revnf/homological.hpp"

#include <numeric>
#include <stdexcept>

namespace revnf {

LinearPart linear_part_from_matrix(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("linear part must be square");
    return {m, std::nullopt};
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_degree_bound(const LinearPart& L, int k) {
    if (L.resonant && L.resonant->mode == ResonanceMode::nonresonant_surrogate &&
        L.resonant->valid_to_degree >= 0 && k > L.resonant->valid_to_degree)
        throw std::domain_error("degree " + std::to_string(k) +
                                " exceeds the validity bound of the nonresonant surrogate (" +
                                std::to_string(L.resonant->valid_to_degree) + ")");
}

}  // namespace

LinearPart build_resonant_L(int n1, int n2, ResonanceMode mode, int kmax) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("frequencies must be positive integers");
    ResonantDescriptor d;
    d.mode = mode;
    long omega1, omega2;
    if (mode == ResonanceMode::resonant) {
        if (std::gcd(n1, n2) != 1)
            throw std::invalid_argument("(n1, n2) must be coprime; reduce the ratio " + std::to_string(n1) + ":" +
                                        std::to_string(n2));
        d.n1 = n1;
        d.n2 = n2;
        omega1 = n1;
        omega2 = n2;
    } else {
        if (kmax < 2) throw std::invalid_argument("nonresonant surrogate needs kmax >= 2");
        int p = kmax + 2;
        while (!is_prime(p)) ++p;
        d.n1 = n1;
        d.n2 = n2;
        d.surrogate_prime = p;
        d.valid_to_degree = kmax;
        omega1 = 1;
        omega2 = p;
    }
    RatMat m(6, 6);
    m.at(0, 1) = 1;
    m.at(2, 3) = rat(omega1);
    m.at(3, 2) = rat(-omega1);
    m.at(4, 5) = rat(omega2);
    m.at(5, 4) = rat(-omega2);
    return {m, d};
}

VecPoly ad(const LinearPart& L, const VecPoly& p) {
    if (L.dim() != p.vars()) throw std::invalid_argument("dimension mismatch in Ad_L");
    VecPoly lx = VecPoly::linear(L.matrix);
    return jacobian_times(p, lx) - postcompose_linear(L.matrix, p);
}

SparseMat ad_matrix(const LinearPart& L, int k) {
    check_degree_bound(L, k);
    int n = L.dim();
    int block = static_cast<int>(scalar_slice_dim(n, k));
    int d = n * block;
    auto basis = monomial_basis(n, k);
    std::vector<std::tuple<int, int, Rational>> trips;
    for (int comp = 0; comp < n; ++comp)
        for (int j = 0; j < block; ++j) {
            VecPoly e(n);
            e.comp(comp) = ScalarPoly::term(n, basis[j], Rational(1));
            SparseVec coords = to_coords(ad(L, e), k);
            int col = comp * block + j;
            for (auto& entry : coords) trips.emplace_back(entry.index, col, std::move(entry.value));
        }
    return SparseMat::from_triplets(d, d, trips);
}

SparseMat scalar_derivation_matrix(const LinearPart& L, int k) {
    check_degree_bound(L, k);
    int n = L.dim();
    int d = static_cast<int>(scalar_slice_dim(n, k));
    auto basis = monomial_basis(n, k);
    VecPoly lx = VecPoly::linear(L.matrix);
    std::vector<std::tuple<int, int, Rational>> trips;
    for (int j = 0; j < d; ++j) {
        ScalarPoly u = ScalarPoly::term(n, basis[j], Rational(1));
        ScalarPoly img(n);
        for (int i = 0; i < n; ++i)
            if (!lx.comp(i).is_zero()) img = img + differentiate(u, i) * lx.comp(i);
        for (const auto& [m, c] : img.terms()) trips.emplace_back(monomial_rank(m), j, c);
    }
    return SparseMat::from_triplets(d, d, trips);
}

GradedSubspace kernel_deg(const LinearPart& L, int k) {
    GradedSubspace s;
    s.kind = SpaceKind::vector;
    s.n = L.dim();
    s.k = k;
    s.basis = nullspace(ad_matrix(L, k));
    return s;
}

GradedSubspace image_deg(const LinearPart& L, int k) {
    GradedSubspace s;
    s.kind = SpaceKind::vector;
    s.n = L.dim();
    s.k = k;
    s.basis = column_space(ad_matrix(L, k));
    return s;
}

GradedSubspace s_equivariants_deg(const LinearPart& L, int k) { return kernel_deg(L.transposed(), k); }

GradedSubspace s_invariants_deg(const LinearPart& L, int k) {
    GradedSubspace s;
    s.kind = SpaceKind::scalar;
    s.n = L.dim();
    s.k = k;
    s.basis = nullspace(scalar_derivation_matrix(L.transposed(), k));
    return s;
}

std::string CompatibilityReport::first_failure() const {
    for (const auto& e : entries)
        if (!e.pass()) return "generator " + std::to_string(e.generator_index);
    return "";
}

CompatibilityReport validate_compatibility(const LinearPart& L, const FiniteSignedGroup& G) {
    if (L.dim() != G.dim()) throw std::invalid_argument("dimension mismatch between L and the group");
    CompatibilityReport report;
    RatMat lt = L.matrix.transpose();
    int idx = 0;
    for (const auto& g : G.generators()) {
        CompatibilityEntry e;
        e.generator_index = idx++;
        e.sign = g.sign;
        RatMat inv = g.matrix.inverse();
        Rational s(g.sign);
        e.pass_L = (g.matrix * L.matrix * inv == L.matrix * s);
        e.pass_Lt = (g.matrix * lt * inv == lt * s);
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace revnf
