#include "revnf/golden.hpp"

#include <numeric>
#include <stdexcept>

#include "revnf/parallel.hpp"

namespace revnf {

namespace {

constexpr int kDim = 6;

// Complex-valued polynomial on R^2 x C^2 in the six real coordinates.
struct CPoly {
    ScalarPoly re, im;
    CPoly() : re(kDim), im(kDim) {}
    CPoly(ScalarPoly r, ScalarPoly i) : re(std::move(r)), im(std::move(i)) {}
};

CPoly c_mul(const CPoly& a, const CPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CPoly c_pow(const CPoly& a, int e) {
    CPoly r(ScalarPoly::constant(kDim, Rational(1)), ScalarPoly(kDim));
    for (int i = 0; i < e; ++i) r = c_mul(r, a);
    return r;
}

CPoly c_times_i(const CPoly& a) { return {-a.im, a.re}; }

CPoly c_scale(const CPoly& a, const ScalarPoly& s) { return {a.re * s, a.im * s}; }

CPoly z1() { return {ScalarPoly::variable(kDim, 2), ScalarPoly::variable(kDim, 3)}; }
CPoly z1_bar() { return {ScalarPoly::variable(kDim, 2), -ScalarPoly::variable(kDim, 3)}; }
CPoly z2() { return {ScalarPoly::variable(kDim, 4), ScalarPoly::variable(kDim, 5)}; }
CPoly z2_bar() { return {ScalarPoly::variable(kDim, 4), -ScalarPoly::variable(kDim, 5)}; }

// z1^n2 * conj(z2)^n1, the resonant combination.
CPoly resonant_word(int n1, int n2) { return c_mul(c_pow(z1(), n2), c_pow(z2_bar(), n1)); }

// Vector field with the given complex value placed in the z1 slot
// (components x3, x4) or z2 slot (components x5, x6).
VecPoly slot(int first_comp, const CPoly& v) {
    VecPoly p(kDim);
    p.comp(first_comp) = v.re;
    p.comp(first_comp + 1) = v.im;
    return p;
}

VecPoly scale(const VecPoly& p, const ScalarPoly& s) {
    VecPoly r(kDim);
    for (int i = 0; i < kDim; ++i) r.comp(i) = p.comp(i) * s;
    return r;
}

void check_coprime(int n1, int n2) {
    if (n1 < 1 || n2 < 1 || std::gcd(n1, n2) != 1)
        throw std::invalid_argument("(n1, n2) must be coprime positive integers; reduce the ratio");
}

}  // namespace

RatMat phi_matrix() {
    return RatMat::diagonal({rat(1), rat(-1), rat(1), rat(-1), rat(1), rat(-1)});
}

RatMat psi_matrix(int a0, int a1, int a2) {
    for (int a : {a0, a1, a2})
        if (a != 1 && a != -1) throw std::invalid_argument("signs must be +1 or -1");
    return RatMat::diagonal({rat(a0), rat(-a0), rat(a1), rat(-a1), rat(a2), rat(-a2)});
}

FiniteSignedGroup golden_group(GoldenFamily family, const std::array<int, 3>& signs) {
    std::vector<SignedElement> gens{{phi_matrix(), -1}};
    if (family == GoldenFamily::z2xz2) gens.push_back({psi_matrix(signs[0], signs[1], signs[2]), -1});
    return close_group(gens, 16);
}

std::vector<ScalarPoly> golden_basic_invariants(int n1, int n2) {
    check_coprime(n1, n2);
    std::vector<ScalarPoly> u;
    u.push_back(ScalarPoly::variable(kDim, 0));                 // u1 = x1
    u.push_back(c_mul(z1(), z1_bar()).re);                      // u2 = |z1|^2
    u.push_back(c_mul(z2(), z2_bar()).re);                      // u3 = |z2|^2
    CPoly w = resonant_word(n1, n2);
    u.push_back(w.re);                                          // u4
    u.push_back(w.im);                                          // u5
    return u;
}

std::vector<VecPoly> golden_generator_list(int n1, int n2) {
    check_coprime(n1, n2);
    ScalarPoly u5 = golden_basic_invariants(n1, n2)[4];
    CPoly w1 = c_mul(c_pow(z1_bar(), n2 - 1), c_pow(z2(), n1));  // conj(z1)^(n2-1) z2^n1
    CPoly w2 = c_mul(c_pow(z1(), n2), c_pow(z2_bar(), n1 - 1));  // z1^n2 conj(z2)^(n1-1)

    std::vector<VecPoly> gens;
    VecPoly g0(kDim);
    g0.comp(1) = ScalarPoly::constant(kDim, Rational(1));
    gens.push_back(g0);  // constant field in the x2 slot

    VecPoly g1(kDim);
    g1.comp(0) = ScalarPoly::variable(kDim, 0) * u5;
    g1.comp(1) = ScalarPoly::variable(kDim, 1) * u5;
    gens.push_back(g1);  // (x1, x2) block scaled by the odd invariant

    gens.push_back(slot(2, c_times_i(z1())));    // i z1 in the z1 slot
    gens.push_back(slot(2, c_times_i(w1)));      // i w1 in the z1 slot
    gens.push_back(slot(2, c_scale(z1(), u5)));  // z1 * u5
    gens.push_back(slot(2, c_scale(w1, u5)));    // w1 * u5
    gens.push_back(slot(4, c_times_i(z2())));    // i z2 in the z2 slot
    gens.push_back(slot(4, c_times_i(w2)));      // i w2 in the z2 slot
    gens.push_back(slot(4, c_scale(z2(), u5)));  // z2 * u5
    gens.push_back(slot(4, c_scale(w2, u5)));    // w2 * u5
    return gens;
}

GoldenData golden_case(GoldenFamily family, int n1, int n2, const std::array<int, 3>& signs) {
    check_coprime(n1, n2);
    auto u = golden_basic_invariants(n1, n2);
    auto gens = golden_generator_list(n1, n2);
    const ScalarPoly &u1 = u[0], &u4 = u[3];

    GoldenData data;
    if (family == GoldenFamily::z2) {
        data.type = 'A';
        data.equivariant_gens = gens;
        data.invariant_gens = {u[0], u[1], u[2], u[3]};
        return data;
    }

    int a0 = signs[0], a1 = signs[1], a2 = signs[2];
    // psi multiplies u4 by a1^n2 a2^n1.
    int c = ((a1 < 0 && n2 % 2) ? -1 : 1) * ((a2 < 0 && n1 % 2) ? -1 : 1);
    data.type = a0 > 0 ? (c > 0 ? 'A' : 'B') : (c > 0 ? 'C' : 'D');

    auto pick = [&](std::initializer_list<int> idx) {
        std::vector<VecPoly> out;
        for (int i : idx) out.push_back(gens[i]);
        return out;
    };
    switch (data.type) {
        case 'A':
            data.equivariant_gens = gens;
            data.invariant_gens = {u[0], u[1], u[2], u[3]};
            break;
        case 'B': {
            data.equivariant_gens = pick({0, 2, 5, 6, 9});
            for (int l : {1, 3, 4, 7, 8}) data.equivariant_gens.push_back(scale(gens[l], u4));
            data.invariant_gens = {u[0], u[1], u[2], u[3] * u[3]};
            break;
        }
        case 'C': {
            data.equivariant_gens.push_back(scale(gens[0], u1));
            for (int l = 1; l <= 9; ++l) data.equivariant_gens.push_back(gens[l]);
            data.invariant_gens = {u[0] * u[0], u[1], u[2], u[3]};
            break;
        }
        case 'D': {
            data.equivariant_gens = pick({2, 5, 6, 9});
            for (int l : {0, 1, 3, 4, 7, 8}) data.equivariant_gens.push_back(scale(gens[l], u1));
            for (int l : {0, 1, 3, 4, 7, 8}) data.equivariant_gens.push_back(scale(gens[l], u4));
            data.invariant_gens = {u[0] * u[0], u[1], u[2], u[3] * u[3], u[0] * u[3]};
            break;
        }
    }
    return data;
}

int golden_default_k_to(int n1, int n2) { return 2 * (n1 + n2) + 1; }

GoldenReport golden_check(GoldenFamily family, int n1, int n2, const std::array<int, 3>& signs, int k_from,
                          int k_to, int jobs) {
    GoldenData data = golden_case(family, n1, n2, signs);
    FiniteSignedGroup G = golden_group(family, signs);
    LinearPart L = build_resonant_L(n1, n2, ResonanceMode::resonant, k_to);

    GoldenReport report;
    report.family = family;
    report.n1 = n1;
    report.n2 = n2;
    report.signs = signs;
    report.type = data.type;
    report.lines.resize(std::max(0, k_to - k_from + 1));
    parallel_for(static_cast<int>(report.lines.size()), jobs, [&](int i) {
        int k = k_from + i;
        GradedSubspace comp = complement_deg(L, G, k);
        GradedSubspace mod = module_slice(data.equivariant_gens, data.invariant_gens, kDim, k);
        report.lines[i] = {k, comp.dim(), mod.dim(), subspace_equal(comp, mod)};
    });
    return report;
}

}  // namespace revnf
