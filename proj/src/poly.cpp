#include "revnf/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace revnf {

ScalarPoly ScalarPoly::constant(int n, const Rational& c) {
    ScalarPoly p(n);
    p.add_term(Monomial(n), c);
    return p;
}

ScalarPoly ScalarPoly::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::out_of_range("variable index");
    ScalarPoly p(n);
    p.add_term(Monomial(n).shifted(i, 1), Rational(1));
    return p;
}

ScalarPoly ScalarPoly::term(int n, const Monomial& m, const Rational& c) {
    if (m.vars() != n) throw std::invalid_argument("monomial variable mismatch");
    ScalarPoly p(n);
    p.add_term(m, c);
    return p;
}

bool ScalarPoly::is_homogeneous(int k) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != k) return false;
    return true;
}

void ScalarPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.vars() != n_) throw std::invalid_argument("monomial variable mismatch");
    if (revnf::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (revnf::is_zero(it->second)) terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    ScalarPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    ScalarPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        Rational neg = -c;
        r.add_term(m, neg);
    }
    return r;
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r(n_);
    for (const auto& [m, c] : terms_) {
        Rational neg = -c;
        r.terms_.emplace(m, std::move(neg));
    }
    return r;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const { return mul_truncated(o, -1); }

ScalarPoly ScalarPoly::operator*(const Rational& c) const {
    ScalarPoly r(n_);
    if (revnf::is_zero(c)) return r;
    for (const auto& [m, v] : terms_) {
        Rational w = v * c;
        r.terms_.emplace(m, std::move(w));
    }
    return r;
}

ScalarPoly ScalarPoly::mul_truncated(const ScalarPoly& o, int kmax) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    ScalarPoly r(n_);
    for (const auto& [ma, ca] : terms_) {
        if (kmax >= 0 && ma.degree() > kmax) continue;
        for (const auto& [mb, cb] : o.terms_) {
            if (kmax >= 0 && ma.degree() + mb.degree() > kmax) continue;
            Rational c = ca * cb;
            r.add_term(ma * mb, c);
        }
    }
    return r;
}

ScalarPoly ScalarPoly::truncated(int kmax) const {
    ScalarPoly r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= kmax) r.terms_.emplace(m, c);
    return r;
}

ScalarPoly ScalarPoly::graded_part(int k) const {
    ScalarPoly r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == k) r.terms_.emplace(m, c);
    return r;
}

Rational ScalarPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point dimension mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m.exp(i); ++e) t *= point[i];
        total += t;
    }
    return total;
}

std::string ScalarPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string cs = rat_to_string(c);
        if (!s.empty()) {
            if (cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        if (m.degree() == 0) {
            s += cs;
        } else if (cs == "1") {
            s += m.str();
        } else if (cs == "-1" && s.empty()) {
            s += "-" + m.str();
        } else {
            s += cs + "*" + m.str();
        }
    }
    return s;
}

VecPoly::VecPoly(std::vector<ScalarPoly> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("empty vector polynomial");
    int n = static_cast<int>(comps_.size());
    for (const auto& c : comps_)
        if (c.vars() != n) throw std::invalid_argument("component variable mismatch");
}

VecPoly VecPoly::identity(int n) {
    VecPoly p(n);
    for (int i = 0; i < n; ++i) p.comps_[i] = ScalarPoly::variable(n, i);
    return p;
}

VecPoly VecPoly::linear(const RatMat& a) {
    if (!a.is_square()) throw std::invalid_argument("linear map must be square");
    int n = a.rows();
    VecPoly p(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!revnf::is_zero(a.at(i, j))) p.comps_[i].add_term(Monomial(n).shifted(j, 1), a.at(i, j));
    return p;
}

bool VecPoly::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

int VecPoly::degree() const {
    int d = -1;
    for (const auto& c : comps_) d = std::max(d, c.degree());
    return d;
}

bool VecPoly::is_homogeneous(int k) const {
    for (const auto& c : comps_)
        if (!c.is_homogeneous(k)) return false;
    return true;
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("variable count mismatch");
    VecPoly r = *this;
    for (int i = 0; i < vars(); ++i) r.comps_[i] = r.comps_[i] + o.comps_[i];
    return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("variable count mismatch");
    VecPoly r = *this;
    for (int i = 0; i < vars(); ++i) r.comps_[i] = r.comps_[i] - o.comps_[i];
    return r;
}

VecPoly VecPoly::operator-() const {
    VecPoly r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

VecPoly VecPoly::operator*(const Rational& c) const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = p * c;
    return r;
}

VecPoly VecPoly::truncated(int kmax) const {
    VecPoly r = *this;
    for (auto& c : r.comps_) c = c.truncated(kmax);
    return r;
}

VecPoly VecPoly::graded_part(int k) const {
    VecPoly r = *this;
    for (auto& c : r.comps_) c = c.graded_part(k);
    return r;
}

std::string VecPoly::str() const {
    std::string s = "(";
    for (int i = 0; i < vars(); ++i) {
        if (i) s += ", ";
        s += comps_[i].str();
    }
    return s + ")";
}

ScalarPoly differentiate(const ScalarPoly& p, int i) {
    if (i < 0 || i >= p.vars()) throw std::out_of_range("derivative variable index");
    ScalarPoly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exp(i);
        if (e == 0) continue;
        Rational v = c * e;
        r.add_term(m.shifted(i, -1), v);
    }
    return r;
}

VecPoly jacobian_times(const VecPoly& p, const VecPoly& v) {
    if (p.vars() != v.vars()) throw std::invalid_argument("variable count mismatch");
    int n = p.vars();
    VecPoly r(n);
    for (int i = 0; i < n; ++i) {
        ScalarPoly acc(n);
        for (int j = 0; j < n; ++j) {
            if (v.comp(j).is_zero()) continue;
            acc = acc + differentiate(p.comp(i), j) * v.comp(j);
        }
        r.comp(i) = acc;
    }
    return r;
}

ScalarPoly precompose_linear(const ScalarPoly& p, const RatMat& a) {
    if (!a.is_square() || a.rows() != p.vars()) throw std::invalid_argument("substitution matrix shape mismatch");
    int n = p.vars();
    // Images of the variables and their powers, built on demand.
    std::vector<ScalarPoly> image;
    image.reserve(n);
    for (int i = 0; i < n; ++i) {
        ScalarPoly row(n);
        for (int j = 0; j < n; ++j)
            if (!is_zero(a.at(i, j))) row.add_term(Monomial(n).shifted(j, 1), a.at(i, j));
        image.push_back(std::move(row));
    }
    std::vector<std::vector<ScalarPoly>> powers(n, {ScalarPoly::constant(n, Rational(1))});
    auto power = [&](int i, int e) -> const ScalarPoly& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image[i]);
        return cache[e];
    };
    ScalarPoly r(n);
    for (const auto& [m, c] : p.terms()) {
        ScalarPoly t = ScalarPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (m.exp(i) > 0) t = t * power(i, m.exp(i));
        r = r + t;
    }
    return r;
}

VecPoly precompose_linear(const VecPoly& p, const RatMat& a) {
    VecPoly r(p.vars());
    for (int i = 0; i < p.vars(); ++i) r.comp(i) = precompose_linear(p.comp(i), a);
    return r;
}

VecPoly postcompose_linear(const RatMat& a, const VecPoly& p) {
    if (!a.is_square() || a.rows() != p.vars()) throw std::invalid_argument("matrix shape mismatch");
    int n = p.vars();
    VecPoly r(n);
    for (int i = 0; i < n; ++i) {
        ScalarPoly acc(n);
        for (int j = 0; j < n; ++j)
            if (!is_zero(a.at(i, j))) acc = acc + p.comp(j) * a.at(i, j);
        r.comp(i) = acc;
    }
    return r;
}

ScalarPoly compose_truncated(const ScalarPoly& p, const VecPoly& q, int kmax) {
    if (p.vars() != q.vars()) throw std::invalid_argument("variable count mismatch");
    int n = p.vars();
    for (int i = 0; i < n; ++i)
        if (!q.comp(i).graded_part(0).is_zero())
            throw std::invalid_argument("composition target must fix the origin");
    std::vector<std::vector<ScalarPoly>> powers(n, {ScalarPoly::constant(n, Rational(1))});
    auto power = [&](int i, int e) -> const ScalarPoly& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back().mul_truncated(q.comp(i), kmax));
        return cache[e];
    };
    ScalarPoly r(n);
    for (const auto& [m, c] : p.terms()) {
        // Since q has no constant term, deg(q^m) >= deg(m).
        if (m.degree() > kmax) continue;
        ScalarPoly t = ScalarPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (m.exp(i) > 0) t = t.mul_truncated(power(i, m.exp(i)), kmax);
        r = r + t;
    }
    return r;
}

VecPoly compose_truncated(const VecPoly& p, const VecPoly& q, int kmax) {
    VecPoly r(p.vars());
    for (int i = 0; i < p.vars(); ++i) r.comp(i) = compose_truncated(p.comp(i), q, kmax);
    return r;
}

VecPoly invert_near_identity(const VecPoly& phi, int kmax) {
    int n = phi.vars();
    VecPoly lin = phi.graded_part(1);
    if (lin != VecPoly::identity(n) || !phi.graded_part(0).is_zero())
        throw std::invalid_argument("inverse requires a map of the form I + (degree >= 2)");
    VecPoly tail = (phi - lin).truncated(kmax);  // the degree >= 2 part
    // psi = I - tail(psi); each pass settles one more degree.
    VecPoly psi = VecPoly::identity(n);
    for (int pass = 2; pass <= kmax; ++pass)
        psi = VecPoly::identity(n) - compose_truncated(tail, psi, kmax);
    return psi;
}

long long vector_slice_dim(int n, int k) {
    return static_cast<long long>(n) * static_cast<long long>(scalar_slice_dim(n, k));
}

SparseVec to_coords(const ScalarPoly& p, int k) {
    if (!p.is_homogeneous(k)) throw std::invalid_argument("to_coords requires a homogeneous polynomial");
    SparseVec v;
    v.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) v.push_back({monomial_rank(m), c});
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    return v;
}

SparseVec to_coords(const VecPoly& p, int k) {
    int n = p.vars();
    long long block = scalar_slice_dim(n, k);
    SparseVec v;
    for (int i = 0; i < n; ++i) {
        SparseVec c = to_coords(p.comp(i), k);
        for (auto& e : c) v.push_back({static_cast<int>(i * block) + e.index, std::move(e.value)});
    }
    return v;
}

ScalarPoly scalar_from_coords(const SparseVec& v, int n, int k) {
    ScalarPoly p(n);
    for (const auto& e : v) p.add_term(monomial_unrank(n, k, e.index), e.value);
    return p;
}

VecPoly vec_from_coords(const SparseVec& v, int n, int k) {
    long long block = scalar_slice_dim(n, k);
    VecPoly p(n);
    for (const auto& e : v) {
        int comp = static_cast<int>(e.index / block);
        int rank = static_cast<int>(e.index % block);
        p.comp(comp).add_term(monomial_unrank(n, k, rank), e.value);
    }
    return p;
}

}  // namespace revnf
