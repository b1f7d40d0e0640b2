#ifndef REVNF_LINALG_HPP
#define REVNF_LINALG_HPP

#include <optional>
#include <vector>

#include "revnf/rational.hpp"

namespace revnf {

// Sparse exact linear algebra over the rationals. Subspaces are stored as
// matrices whose rows are coordinate vectors; the canonical form of a
// subspace is the reduced row echelon form of that matrix, which is unique,
// so equality of subspaces is equality of stored matrices.

struct SparseEntry {
    int index;
    Rational value;
    bool operator==(const SparseEntry& o) const { return index == o.index && value == o.value; }
};

// Sorted by index, no zero values stored.
using SparseVec = std::vector<SparseEntry>;

SparseVec sv_scale(const SparseVec& x, const Rational& c);
// x + c*y, merged.
SparseVec sv_axpy(const SparseVec& x, const Rational& c, const SparseVec& y);
Rational sv_get(const SparseVec& x, int index);
SparseVec sv_unit(int index);

class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

    static SparseMat from_triplets(int nrows, int ncols, const std::vector<std::tuple<int, int, Rational>>& trips);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }

    const SparseVec& row(int i) const { return rows_[i]; }
    void set_row(int i, SparseVec v) { rows_[i] = std::move(v); }
    void append_row(SparseVec v) {
        rows_.push_back(std::move(v));
        ++nrows_;
    }

    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& r : rows_) t += r.size();
        return t;
    }

    SparseMat transpose() const;
    // this (m x k) times o (k x n).
    SparseMat multiply(const SparseMat& o) const;
    SparseVec multiply_vec(const SparseVec& x) const;  // this * x (x indexed by columns)

    bool operator==(const SparseMat& o) const { return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_; }
    bool operator!=(const SparseMat& o) const { return !(*this == o); }

  private:
    int nrows_ = 0, ncols_ = 0;
    std::vector<SparseVec> rows_;
};

SparseMat vstack(const SparseMat& a, const SparseMat& b);
SparseMat hstack(const SparseMat& a, const SparseMat& b);
// Columns [from, to) as a new matrix.
SparseMat column_slice(const SparseMat& a, int from, int to);

struct Rref {
    int rank = 0;
    std::vector<int> pivot_cols;  // ascending
    SparseMat mat;                // canonical reduced row echelon form, zero rows dropped
};

// Reduced row echelon form. Elimination runs independently on the connected
// components of the row/column adjacency graph; the merged result is the
// global RREF, which is unique, so the decomposition cannot change it.
Rref rref(const SparseMat& m);

int rank_of(const SparseMat& m);

// Rows form the canonical basis of the kernel {x : m x = 0}.
SparseMat nullspace(const SparseMat& m);

// Canonical basis of the column space, returned as rows of length m.nrows().
SparseMat column_space(const SparseMat& m);

// Minimal-coordinate solution of A x = b: the RREF particular solution with
// all free variables zero. Empty optional when the system is inconsistent.
std::optional<SparseVec> solve_particular(const SparseMat& a, const SparseVec& b);

}  // namespace revnf

#endif
