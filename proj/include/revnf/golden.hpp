#ifndef REVNF_GOLDEN_HPP
#define REVNF_GOLDEN_HPP

#include <array>
#include <string>
#include <vector>

#include "revnf/normalform.hpp"

namespace revnf {

// Reference generator data for the two involution families acting on
// R^2 x C^2, expanded to real coordinates with z1 = x3 + i x4 and
// z2 = x5 + i x6. Everything is code-generated from (n1, n2) and the signs,
// never hand-typed per case.
enum class GoldenFamily { z2, z2xz2 };

// phi(x1, x2, z1, z2) = (x1, -x2, conj z1, conj z2)
RatMat phi_matrix();
// psi(x1, x2, z1, z2) = (a0 x1, -a0 x2, a1 conj z1, a2 conj z2)
RatMat psi_matrix(int a0, int a1, int a2);

FiniteSignedGroup golden_group(GoldenFamily family, const std::array<int, 3>& signs);

// The five basic invariants in real coordinates:
// x1, |z1|^2, |z2|^2, Re(z1^n2 conj(z2)^n1), Im(z1^n2 conj(z2)^n1).
std::vector<ScalarPoly> golden_basic_invariants(int n1, int n2);

// The ten reversible-equivariant module generators in real coordinates,
// indexed as the type tables expect them.
std::vector<VecPoly> golden_generator_list(int n1, int n2);

struct GoldenData {
    char type = 'A';
    std::vector<VecPoly> equivariant_gens;
    std::vector<ScalarPoly> invariant_gens;
};

// The expected complement-module data: the type letter from the sign parity
// rules and the corresponding generator/invariant lists. Signs are ignored
// for the z2 family.
GoldenData golden_case(GoldenFamily family, int n1, int n2, const std::array<int, 3>& signs);

struct GoldenDegreeLine {
    int k = 0;
    int dim_complement = 0;
    int dim_module = 0;
    bool equal = false;
};

struct GoldenReport {
    GoldenFamily family = GoldenFamily::z2;
    int n1 = 1, n2 = 1;
    std::array<int, 3> signs{1, 1, 1};
    char type = 'A';
    std::vector<GoldenDegreeLine> lines;
    bool pass() const {
        for (const auto& l : lines)
            if (!l.equal) return false;
        return true;
    }
};

// Compares complement_deg against the module slice of the expected
// generators for every degree in [k_from, k_to].
GoldenReport golden_check(GoldenFamily family, int n1, int n2, const std::array<int, 3>& signs, int k_from,
                          int k_to, int jobs = 1);

// Default comparison bound 2(n1+n2)+1, the degree of the largest generator.
int golden_default_k_to(int n1, int n2);

}  // namespace revnf

#endif
