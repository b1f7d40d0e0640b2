#ifndef REVNF_MONOMIAL_HPP
#define REVNF_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace revnf {

// Monomial in n variables, stored as an exponent vector. The global
// ordering is graded lexicographic: lower total degree first, ties broken
// lexicographically with x1 most significant (higher power of x1 first),
// so monomial_basis(2, 2) lists x1^2, x1*x2, x2^2.
class Monomial {
  public:
    explicit Monomial(int n) : exps_(n, 0), degree_(0) {}
    explicit Monomial(std::vector<int> exps);

    int vars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exp(int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    // New monomial with exponent i shifted by d (d may be negative).
    Monomial shifted(int i, int d) const;
    Monomial operator*(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    std::string str() const;  // "x1^2*x3", "1" for the constant monomial

  private:
    std::vector<int> exps_;
    int degree_;
};

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

std::uint64_t binomial(int n, int k);

// C(n+k-1, k), the dimension of the degree-k slice of scalar polynomials.
std::uint64_t scalar_slice_dim(int n, int k);

// All monomials of total degree exactly k in the global ordering.
std::vector<Monomial> monomial_basis(int n, int k);

// Position of m within monomial_basis(m.vars(), m.degree()).
int monomial_rank(const Monomial& m);
Monomial monomial_unrank(int n, int k, int index);

}  // namespace revnf

#endif
