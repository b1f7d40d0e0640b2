#ifndef REVNF_GROUP_HPP
#define REVNF_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "revnf/matrix.hpp"
#include "revnf/poly.hpp"

namespace revnf {

// Group element together with its sign character value: +1 for a symmetry,
// -1 for a reversing symmetry.
struct SignedElement {
    RatMat matrix;
    int sign = 1;
};

// Finite matrix group closed under products and inverses, with the sign map
// verified to be a homomorphism during closure. delta is the first reversing
// element in generation order (absent when the sign character is trivial).
class FiniteSignedGroup {
  public:
    static FiniteSignedGroup trivial(int n);

    int dim() const { return n_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<SignedElement>& elements() const { return elements_; }
    const SignedElement& element(int i) const { return elements_[i]; }

    // Generating set recorded at closure time; space computations constrain
    // by generators only (fixed by generators implies fixed by the group).
    const std::vector<SignedElement>& generators() const { return generators_; }

    bool has_reversing() const { return delta_.has_value(); }
    const SignedElement& delta() const;
    std::vector<SignedElement> reversing_elements() const;
    std::vector<SignedElement> plus_elements() const;

    friend FiniteSignedGroup close_group(const std::vector<SignedElement>& generators, int max_order);

  private:
    int n_ = 0;
    std::vector<SignedElement> elements_;
    std::vector<SignedElement> generators_;
    std::optional<int> delta_;  // index into elements_
};

// Breadth-first closure of the generating set. Throws when the closure
// exceeds max_order ("not finite within bound"), when a matrix is singular,
// or when the same matrix is reached with two different signs.
FiniteSignedGroup close_group(const std::vector<SignedElement>& generators, int max_order = 64);

// gamma ⊙ f (x) = f(gamma x)
ScalarPoly act_odot(const SignedElement& g, const ScalarPoly& f);
// gamma ⋆ g (x) = gamma^{-1} g(gamma x)
VecPoly act_star(const SignedElement& g, const VecPoly& p);

bool is_plus_invariant(const FiniteSignedGroup& G, const ScalarPoly& f, std::string* violator = nullptr);
bool is_plus_equivariant(const FiniteSignedGroup& G, const VecPoly& p, std::string* violator = nullptr);

// Reynolds operators on the Gamma_+-invariants: R(f) = (f + delta ⊙ f)/2,
// S(f) = (f - delta ⊙ f)/2. Inputs are checked for Gamma_+-invariance.
ScalarPoly reynolds_R(const FiniteSignedGroup& G, const ScalarPoly& f);
ScalarPoly reynolds_S(const FiniteSignedGroup& G, const ScalarPoly& f);
// Equivariant versions on the Gamma_+-equivariants.
VecPoly vec_R(const FiniteSignedGroup& G, const VecPoly& p);
VecPoly vec_S(const FiniteSignedGroup& G, const VecPoly& p);

// pi(p) = ((1/|G+|) sum tau ⋆ p - (1/|G+|) sum (delta tau) ⋆ p) / 2, the
// grading-preserving projection onto the reversible-equivariants.
VecPoly project_pi(const FiniteSignedGroup& G, const VecPoly& p);
// Same with an explicit choice of reversing element; the result does not
// depend on it.
VecPoly project_pi_with(const FiniteSignedGroup& G, const SignedElement& delta, const VecPoly& p);

// Average of gamma ⋆ p over the whole group: projection onto the
// Gamma-equivariants.
VecPoly average_star(const FiniteSignedGroup& G, const VecPoly& p);

}  // namespace revnf

#endif
