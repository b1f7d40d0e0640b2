#ifndef REVNF_TEST_HELPERS_HPP
#define REVNF_TEST_HELPERS_HPP

// Independent oracles for the exact linear algebra and polynomial identities.
// Everything here is deliberately naive: dense matrices, textbook
// elimination, evaluation at explicit rational points.

#include <random>
#include <vector>

#include "revnf/linalg.hpp"
#include "revnf/poly.hpp"

namespace testor {

using revnf::Rational;

using DenseMat = std::vector<std::vector<Rational>>;

inline DenseMat to_dense(const revnf::SparseMat& m) {
    DenseMat d(m.nrows(), std::vector<Rational>(m.ncols(), Rational(0)));
    for (int i = 0; i < m.nrows(); ++i)
        for (const auto& e : m.row(i)) d[i][e.index] = e.value;
    return d;
}

// Textbook Gauss-Jordan, always pivoting on the first nonzero row.
inline int dense_rref(DenseMat& a) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(a[r][c]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        Rational lead = a[rank][c];
        for (int j = 0; j < cols; ++j) a[rank][j] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline int dense_rank(const revnf::SparseMat& m) {
    DenseMat d = to_dense(m);
    return dense_rref(d);
}

// Deterministic pseudo-random sparse matrix with small rational entries.
inline revnf::SparseMat random_sparse(int rows, int cols, std::uint64_t seed, int fill_percent = 35) {
    std::mt19937_64 rng(seed);
    std::vector<std::tuple<int, int, Rational>> trips;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (static_cast<int>(rng() % 100) >= fill_percent) continue;
            long num = static_cast<long>(rng() % 11) - 5;
            long den = static_cast<long>(rng() % 3) + 1;
            if (num) trips.emplace_back(i, j, revnf::rat(num, den));
        }
    return revnf::SparseMat::from_triplets(rows, cols, trips);
}

// Exact evaluation points for polynomial identity checks.
inline std::vector<Rational> eval_point(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i)
        pt.push_back(revnf::rat(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1));
    return pt;
}

inline bool eval_equal(const revnf::VecPoly& a, const revnf::VecPoly& b, int trials, std::uint64_t seed) {
    for (int t = 0; t < trials; ++t) {
        auto pt = eval_point(a.vars(), seed + t);
        for (int i = 0; i < a.vars(); ++i)
            if (a.comp(i).eval(pt) != b.comp(i).eval(pt)) return false;
    }
    return true;
}

}  // namespace testor

#endif
