#ifndef REVNF_HOMOLOGICAL_HPP
#define REVNF_HOMOLOGICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "revnf/group.hpp"
#include "revnf/subspace.hpp"

namespace revnf {

enum class ResonanceMode { resonant, nonresonant_surrogate };

// Descriptor of the structured 6x6 linearization: a 2x2 nilpotent block and
// two rotation blocks with frequencies (omega1, omega2). In resonant mode
// omega = (n1, n2). In nonresonant-surrogate mode omega = (1, P) with P the
// smallest prime above kmax + 1, so no integer relation of weight <= kmax + 1
// can fire; kernels computed up to valid_to_degree then agree with the truly
// nonresonant ones.
struct ResonantDescriptor {
    int n1 = 1, n2 = 1;
    ResonanceMode mode = ResonanceMode::resonant;
    int surrogate_prime = 0;   // nonresonant mode only
    int valid_to_degree = -1;  // nonresonant mode only; -1 means unbounded
};

struct LinearPart {
    RatMat matrix;
    std::optional<ResonantDescriptor> resonant;

    int dim() const { return matrix.rows(); }
    LinearPart transposed() const { return {matrix.transpose(), resonant}; }
};

LinearPart linear_part_from_matrix(const RatMat& m);
LinearPart build_resonant_L(int n1, int n2, ResonanceMode mode, int kmax);

// Ad_L(p)(x) = (Dp)_(x) L x - L p(x)
VecPoly ad(const LinearPart& L, const VecPoly& p);

// Matrix of Ad_L restricted to the degree-k vector slice; column j is the
// image of the j-th canonical basis element.
SparseMat ad_matrix(const LinearPart& L, int k);

// Scalar counterpart u -> (Du) L x, the derivation along the linear field.
SparseMat scalar_derivation_matrix(const LinearPart& L, int k);

GradedSubspace kernel_deg(const LinearPart& L, int k);
GradedSubspace image_deg(const LinearPart& L, int k);

// ker Ad_{L^t}^k, the degree-k equivariants of the one-parameter group
// generated by e^{s L^t}.
GradedSubspace s_equivariants_deg(const LinearPart& L, int k);
// Degree-k invariants of the same group: kernel of the derivation along L^t x.
GradedSubspace s_invariants_deg(const LinearPart& L, int k);

struct CompatibilityEntry {
    int generator_index = 0;
    int sign = 0;
    bool pass_L = false;
    bool pass_Lt = false;
    bool pass() const { return pass_L && pass_Lt; }
};

struct CompatibilityReport {
    std::vector<CompatibilityEntry> entries;
    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass()) return false;
        return true;
    }
    std::string first_failure() const;
};

// Checks gamma L gamma^{-1} = sigma(gamma) L (and the transpose version) for
// every generator: the infinitesimal form of the semidirect-product
// compatibility between L and the group action.
CompatibilityReport validate_compatibility(const LinearPart& L, const FiniteSignedGroup& G);

}  // namespace revnf

#endif
