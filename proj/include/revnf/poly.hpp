#ifndef REVNF_POLY_HPP
#define REVNF_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "revnf/linalg.hpp"
#include "revnf/matrix.hpp"
#include "revnf/monomial.hpp"
#include "revnf/rational.hpp"

namespace revnf {

// Sparse exact multivariate polynomial. Terms iterate in the global graded
// lexicographic order; zero coefficients are never stored.
class ScalarPoly {
  public:
    explicit ScalarPoly(int n) : n_(n) {}

    static ScalarPoly zero(int n) { return ScalarPoly(n); }
    static ScalarPoly constant(int n, const Rational& c);
    static ScalarPoly variable(int n, int i);  // x_{i+1}
    static ScalarPoly term(int n, const Monomial& m, const Rational& c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    bool is_homogeneous(int k) const;

    const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator-() const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly operator*(const Rational& c) const;
    bool operator==(const ScalarPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    ScalarPoly truncated(int kmax) const;    // drop terms of degree > kmax
    ScalarPoly graded_part(int k) const;     // terms of degree exactly k
    ScalarPoly mul_truncated(const ScalarPoly& o, int kmax) const;

    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

  private:
    int n_;
    std::map<Monomial, Rational, MonomialOrder> terms_;
};

// Polynomial self-map of R^n: one ScalarPoly per component.
class VecPoly {
  public:
    explicit VecPoly(int n) : comps_(n, ScalarPoly(n)) {}
    explicit VecPoly(std::vector<ScalarPoly> comps);

    static VecPoly zero(int n) { return VecPoly(n); }
    static VecPoly identity(int n);
    static VecPoly linear(const RatMat& a);  // x -> A x

    int vars() const { return static_cast<int>(comps_.size()); }
    const ScalarPoly& comp(int i) const { return comps_[i]; }
    ScalarPoly& comp(int i) { return comps_[i]; }

    bool is_zero() const;
    int degree() const;
    bool is_homogeneous(int k) const;

    VecPoly operator+(const VecPoly& o) const;
    VecPoly operator-(const VecPoly& o) const;
    VecPoly operator-() const;
    VecPoly operator*(const Rational& c) const;
    bool operator==(const VecPoly& o) const { return comps_ == o.comps_; }
    bool operator!=(const VecPoly& o) const { return !(*this == o); }

    VecPoly truncated(int kmax) const;
    VecPoly graded_part(int k) const;

    std::string str() const;

  private:
    std::vector<ScalarPoly> comps_;
};

ScalarPoly differentiate(const ScalarPoly& p, int i);  // d/dx_{i+1}

// Component i of the result is sum_j (dp_i/dx_j) v_j.
VecPoly jacobian_times(const VecPoly& p, const VecPoly& v);

// x -> p(Ax).
ScalarPoly precompose_linear(const ScalarPoly& p, const RatMat& a);
VecPoly precompose_linear(const VecPoly& p, const RatMat& a);
// x -> A p(x).
VecPoly postcompose_linear(const RatMat& a, const VecPoly& p);

// p(q(x)) with every term of degree > kmax discarded. q must fix the origin.
VecPoly compose_truncated(const VecPoly& p, const VecPoly& q, int kmax);
ScalarPoly compose_truncated(const ScalarPoly& p, const VecPoly& q, int kmax);

// Truncated inverse of phi = I + (degree >= 2): returns psi with
// compose_truncated(phi, psi, kmax) = I through degree kmax.
VecPoly invert_near_identity(const VecPoly& phi, int kmax);

// Coordinates of homogeneous slices. The degree-k vector slice is indexed
// component-major: index = comp * scalar_slice_dim(n, k) + monomial_rank(m).
long long vector_slice_dim(int n, int k);
SparseVec to_coords(const ScalarPoly& p, int k);
SparseVec to_coords(const VecPoly& p, int k);
ScalarPoly scalar_from_coords(const SparseVec& v, int n, int k);
VecPoly vec_from_coords(const SparseVec& v, int n, int k);

}  // namespace revnf

#endif
