#include "revnf/group.hpp"

#include <map>
#include <stdexcept>

namespace revnf {

FiniteSignedGroup FiniteSignedGroup::trivial(int n) {
    return close_group({SignedElement{RatMat::identity(n), 1}}, 1);
}

const SignedElement& FiniteSignedGroup::delta() const {
    if (!delta_) throw std::domain_error("group has no reversing element (sign character is trivial)");
    return elements_[*delta_];
}

std::vector<SignedElement> FiniteSignedGroup::reversing_elements() const {
    std::vector<SignedElement> out;
    for (const auto& e : elements_)
        if (e.sign < 0) out.push_back(e);
    return out;
}

std::vector<SignedElement> FiniteSignedGroup::plus_elements() const {
    std::vector<SignedElement> out;
    for (const auto& e : elements_)
        if (e.sign > 0) out.push_back(e);
    return out;
}

FiniteSignedGroup close_group(const std::vector<SignedElement>& generators, int max_order) {
    if (generators.empty()) throw std::invalid_argument("close_group needs at least one generator");
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    int n = generators.front().matrix.rows();
    for (const auto& g : generators) {
        if (!g.matrix.is_square() || g.matrix.rows() != n)
            throw std::invalid_argument("generators must be square matrices of equal size");
        if (g.sign != 1 && g.sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        g.matrix.inverse();  // throws on singular generator
    }

    struct MatLess {
        bool operator()(const RatMat& a, const RatMat& b) const { return a.lex_less(b); }
    };
    std::map<RatMat, int, MatLess> sign_of;
    std::vector<SignedElement> elements;

    auto insert = [&](const RatMat& m, int sign) -> bool {
        auto it = sign_of.find(m);
        if (it != sign_of.end()) {
            if (it->second != sign)
                throw std::domain_error("sigma is not a homomorphism on the generated set");
            return false;
        }
        sign_of.emplace(m, sign);
        elements.push_back({m, sign});
        return true;
    };

    insert(RatMat::identity(n), 1);
    for (const auto& g : generators) insert(g.matrix, g.sign);
    // Generators already seen (e.g. the identity) still need their products
    // tested, so walk every element, not only fresh ones.
    std::size_t next = 0;
    while (next < elements.size()) {
        if (static_cast<int>(elements.size()) > max_order)
            throw std::domain_error("group not finite within bound (closure exceeded max_order)");
        SignedElement cur = elements[next];
        for (const auto& g : generators) {
            RatMat prod = cur.matrix * g.matrix;
            insert(prod, cur.sign * g.sign);
        }
        ++next;
    }
    if (static_cast<int>(elements.size()) > max_order)
        throw std::domain_error("group not finite within bound (closure exceeded max_order)");
    // Inverses are automatic in a finite closure, but the sign consistency of
    // each inverse still needs the check.
    for (const auto& e : elements) {
        RatMat inv = e.matrix.inverse();
        auto it = sign_of.find(inv);
        if (it == sign_of.end()) throw std::logic_error("closure not closed under inverses");
        if (it->second != e.sign) throw std::domain_error("sigma is not a homomorphism on the generated set");
    }

    FiniteSignedGroup G;
    G.n_ = n;
    G.elements_ = std::move(elements);
    G.generators_ = generators;
    for (std::size_t i = 0; i < G.elements_.size(); ++i)
        if (G.elements_[i].sign < 0) {
            G.delta_ = static_cast<int>(i);
            break;
        }
    return G;
}

ScalarPoly act_odot(const SignedElement& g, const ScalarPoly& f) {
    if (g.matrix.rows() != f.vars()) throw std::invalid_argument("dimension mismatch in ⊙ action");
    return precompose_linear(f, g.matrix);
}

VecPoly act_star(const SignedElement& g, const VecPoly& p) {
    if (g.matrix.rows() != p.vars()) throw std::invalid_argument("dimension mismatch in ⋆ action");
    return postcompose_linear(g.matrix.inverse(), precompose_linear(p, g.matrix));
}

bool is_plus_invariant(const FiniteSignedGroup& G, const ScalarPoly& f, std::string* violator) {
    for (const auto& e : G.elements()) {
        if (e.sign < 0) continue;
        if (act_odot(e, f) != f) {
            if (violator) *violator = e.matrix.str();
            return false;
        }
    }
    return true;
}

bool is_plus_equivariant(const FiniteSignedGroup& G, const VecPoly& p, std::string* violator) {
    for (const auto& e : G.elements()) {
        if (e.sign < 0) continue;
        if (act_star(e, p) != p) {
            if (violator) *violator = e.matrix.str();
            return false;
        }
    }
    return true;
}

namespace {

const Rational kHalf = rat(1, 2);

void require_reversing(const FiniteSignedGroup& G) {
    if (!G.has_reversing())
        throw std::domain_error("operation requires a reversing element (sigma is trivial)");
}

}  // namespace

namespace {

void require_plus_invariant(const FiniteSignedGroup& G, const ScalarPoly& f) {
    std::string who;
    if (!is_plus_invariant(G, f, &who))
        throw std::invalid_argument("Reynolds operator input is not Gamma_+-invariant; violated by " + who);
}

void require_plus_equivariant(const FiniteSignedGroup& G, const VecPoly& p) {
    std::string who;
    if (!is_plus_equivariant(G, p, &who))
        throw std::invalid_argument("Reynolds operator input is not Gamma_+-equivariant; violated by " + who);
}

}  // namespace

ScalarPoly reynolds_R(const FiniteSignedGroup& G, const ScalarPoly& f) {
    require_reversing(G);
    require_plus_invariant(G, f);
    return (f + act_odot(G.delta(), f)) * kHalf;
}

ScalarPoly reynolds_S(const FiniteSignedGroup& G, const ScalarPoly& f) {
    require_reversing(G);
    require_plus_invariant(G, f);
    return (f - act_odot(G.delta(), f)) * kHalf;
}

VecPoly vec_R(const FiniteSignedGroup& G, const VecPoly& p) {
    require_reversing(G);
    require_plus_equivariant(G, p);
    return (p + act_star(G.delta(), p)) * kHalf;
}

VecPoly vec_S(const FiniteSignedGroup& G, const VecPoly& p) {
    require_reversing(G);
    require_plus_equivariant(G, p);
    return (p - act_star(G.delta(), p)) * kHalf;
}

VecPoly project_pi(const FiniteSignedGroup& G, const VecPoly& p) {
    require_reversing(G);
    return project_pi_with(G, G.delta(), p);
}

VecPoly project_pi_with(const FiniteSignedGroup& G, const SignedElement& delta, const VecPoly& p) {
    require_reversing(G);
    if (delta.sign >= 0) throw std::invalid_argument("project_pi needs a reversing element as delta");
    VecPoly plus = VecPoly::zero(p.vars());
    VecPoly minus = VecPoly::zero(p.vars());
    int count = 0;
    for (const auto& tau : G.elements()) {
        if (tau.sign < 0) continue;
        plus = plus + act_star(tau, p);
        SignedElement dt{delta.matrix * tau.matrix, -tau.sign};
        minus = minus + act_star(dt, p);
        ++count;
    }
    return (plus - minus) * (kHalf / count);
}

VecPoly average_star(const FiniteSignedGroup& G, const VecPoly& p) {
    VecPoly acc = VecPoly::zero(p.vars());
    for (const auto& e : G.elements()) acc = acc + act_star(e, p);
    return acc * rat(1, G.order());
}

}  // namespace revnf
