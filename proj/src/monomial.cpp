#include "revnf/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace revnf {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable");
    degree_ = 0;
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::shifted(int i, int d) const {
    std::vector<int> e = exps_;
    e[i] += d;
    if (e[i] < 0) throw std::invalid_argument("negative exponent after shift");
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("monomial product variable mismatch");
    std::vector<int> e = exps_;
    for (int i = 0; i < vars(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < vars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // Within a degree, larger exponent vector (lex, x1 first) comes earlier.
    return a.exponents() > b.exponents();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t scalar_slice_dim(int n, int k) { return binomial(n + k - 1, k); }

namespace {

void emit_monomials(int n, int k, std::vector<int>& prefix, std::vector<Monomial>& out) {
    if (static_cast<int>(prefix.size()) == n - 1) {
        prefix.push_back(k);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = k; e >= 0; --e) {
        prefix.push_back(e);
        emit_monomials(n, k - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int k) {
    if (n < 1) throw std::invalid_argument("monomial_basis: n must be >= 1");
    if (k < 0) throw std::invalid_argument("monomial_basis: k must be >= 0");
    std::vector<Monomial> out;
    out.reserve(scalar_slice_dim(n, k));
    std::vector<int> prefix;
    emit_monomials(n, k, prefix, out);
    return out;
}

int monomial_rank(const Monomial& m) {
    int n = m.vars();
    int rem = m.degree();
    std::uint64_t rank = 0;
    for (int i = 0; i < n - 1; ++i) {
        // Skip the blocks with a larger exponent on variable i.
        for (int e = rem; e > m.exp(i); --e) rank += scalar_slice_dim(n - i - 1, rem - e);
        rem -= m.exp(i);
    }
    return static_cast<int>(rank);
}

Monomial monomial_unrank(int n, int k, int index) {
    std::vector<int> exps(n, 0);
    int rem = k;
    std::uint64_t idx = static_cast<std::uint64_t>(index);
    for (int i = 0; i < n - 1; ++i) {
        for (int e = rem; e >= 0; --e) {
            std::uint64_t block = scalar_slice_dim(n - i - 1, rem - e);
            if (idx < block) {
                exps[i] = e;
                rem -= e;
                break;
            }
            idx -= block;
        }
    }
    exps[n - 1] = rem;
    return Monomial(std::move(exps));
}

}  // namespace revnf
