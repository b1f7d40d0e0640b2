#ifndef REVNF_VERIFY_HPP
#define REVNF_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "revnf/golden.hpp"
#include "revnf/normalform.hpp"

namespace revnf {

struct CheckLine {
    std::string name;
    int k = -1;  // degree, or -1 for degree-independent checks
    std::map<std::string, long long> data;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// P^k = ker Ad_{L^t}^k ⊕ Ad_L(P^k) at each degree in [k_from, k_to].
VerifyReport run_elphick(const LinearPart& L, int k_from, int k_to, int jobs = 1);

// Q^k(Gamma) = Q^k(S ⋊ Gamma) ⊕ Ad_L(P^k(Gamma)) at each degree.
VerifyReport run_thm44(const LinearPart& L, const FiniteSignedGroup& G, int k_from, int k_to, int jobs = 1);

// Randomized exact identities: module interchange under Ad_L, the
// S Ad_L = Ad_L R intertwining, the sigma-twisted star equivariance of Ad_L,
// and the per-degree image identity pi(Ad_L(P^k)) = Ad_L(P^k(Gamma)).
VerifyReport run_lemmas(const LinearPart& L, const FiniteSignedGroup& G, int k_from, int k_to, int samples,
                        std::uint64_t seed, int jobs = 1);

// pi is a grading-preserving projection onto the reversible-equivariants,
// independent of the choice of reversing element, and maps the degree-k
// S-equivariants onto the complement slice.
VerifyReport run_pi(const LinearPart& L, const FiniteSignedGroup& G, int k_from, int k_to, int samples,
                    std::uint64_t seed, int jobs = 1);

// P^k(Gamma_+) = P^k(Gamma) ⊕ Q^k(Gamma), scalar and vector versions.
VerifyReport run_decompose_plus(const FiniteSignedGroup& G, int k_from, int k_to, int jobs = 1);

// Deterministic random homogeneous polynomials for the sample-based checks.
VecPoly random_homogeneous(int n, int k, std::uint64_t seed);

}  // namespace revnf

#endif
