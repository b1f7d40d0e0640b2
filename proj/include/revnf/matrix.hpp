#ifndef REVNF_MATRIX_HPP
#define REVNF_MATRIX_HPP

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "revnf/rational.hpp"

namespace revnf {

// Small dense rational matrix: group elements, linearizations. Exact
// linear algebra on graded slices lives in linalg.hpp instead.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // Row-major literal, e.g. RatMat::from({{0,1},{0,0}}).
    static RatMat from(std::initializer_list<std::initializer_list<long>> rows) {
        RatMat m(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m.cols_) throw std::invalid_argument("ragged matrix literal");
            int j = 0;
            for (long v : row) m.at(i, j++) = rat(v);
            ++i;
        }
        return m;
    }

    static RatMat diagonal(const std::vector<Rational>& d) {
        RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < m.rows_; ++i) m.at(i, i) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const RatMat& o) const { return !(*this == o); }

    RatMat operator*(const RatMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RatMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& v = at(i, k);
                if (is_zero(v)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (is_zero(o.at(k, j))) continue;
                    r.at(i, j) += v * o.at(k, j);
                }
            }
        return r;
    }

    RatMat operator*(const Rational& s) const {
        RatMat r = *this;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    RatMat operator-(const RatMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
        RatMat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    RatMat transpose() const {
        RatMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_identity() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_zero_matrix() const {
        for (const auto& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    // Exact Gauss-Jordan inverse; throws on singular input.
    RatMat inverse() const {
        if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
        int n = rows_;
        RatMat work = *this;
        RatMat inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!is_zero(work.at(r, col))) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular matrix");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(work.at(piv, j), work.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            Rational lead = work.at(col, col);
            for (int j = 0; j < n; ++j) {
                work.at(col, j) /= lead;
                inv.at(col, j) /= lead;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || is_zero(work.at(r, col))) continue;
                Rational f = work.at(r, col);
                for (int j = 0; j < n; ++j) {
                    work.at(r, j) -= f * work.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += rat_to_string(at(i, j));
            }
        }
        return s + "]";
    }

    // Strict total order so matrices can key deterministic sets/maps.
    bool lex_less(const RatMat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            int c = cmp(a_[i], o.a_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace revnf

#endif
