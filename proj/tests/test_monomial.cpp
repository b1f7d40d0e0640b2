#include <doctest.h>

#include "revnf/monomial.hpp"

using namespace revnf;

namespace {

// Stars-and-bars count through factorials, independent of binomial().
long long factorial_count(int n, int k) {
    long long num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n + k - i;  // (n+k-1)(n+k-2)...(n)
        den *= i;
    }
    return num / den;
}

}  // namespace

TEST_CASE("monomial basis sizes and ordering") {
    auto b0 = monomial_basis(2, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].degree() == 0);

    auto b2 = monomial_basis(2, 2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0].exponents() == std::vector<int>{2, 0});
    CHECK(b2[1].exponents() == std::vector<int>{1, 1});
    CHECK(b2[2].exponents() == std::vector<int>{0, 2});

    CHECK(monomial_basis(6, 5).size() == 252);
    CHECK(factorial_count(6, 5) == 252);
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k)
            CHECK(static_cast<long long>(monomial_basis(n, k).size()) == factorial_count(n, k));
}

TEST_CASE("global order is graded lexicographic") {
    MonomialOrder less;
    Monomial a({1, 0, 0});  // x1
    Monomial b({0, 2, 0});  // x2^2
    CHECK(less(a, b));      // degree first
    Monomial c({2, 0, 1});
    Monomial d({1, 2, 0});
    CHECK(less(c, d));  // same degree, higher x1 power first
    CHECK(!less(d, c));
    CHECK(!less(c, c));
}

TEST_CASE("rank and unrank invert each other") {
    for (int n : {1, 2, 3, 6}) {
        for (int k : {0, 1, 3, 5}) {
            auto basis = monomial_basis(n, k);
            for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
                CHECK(monomial_rank(basis[i]) == i);
                CHECK(monomial_unrank(n, k, i) == basis[i]);
            }
        }
    }
}

TEST_CASE("monomial arithmetic") {
    Monomial m({2, 1});
    CHECK(m.degree() == 3);
    CHECK(m.shifted(0, -1).exponents() == std::vector<int>{1, 1});
    CHECK((m * Monomial({0, 2})).exponents() == std::vector<int>{2, 3});
    CHECK(m.str() == "x1^2*x2");
    CHECK(Monomial(2).str() == "1");
    CHECK_THROWS(m.shifted(1, -2));
}
