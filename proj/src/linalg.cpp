#include "revnf/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace revnf {

SparseVec sv_scale(const SparseVec& x, const Rational& c) {
    if (is_zero(c)) return {};
    SparseVec r;
    r.reserve(x.size());
    for (const auto& e : x) {
        Rational v = e.value * c;
        r.push_back({e.index, std::move(v)});
    }
    return r;
}

SparseVec sv_axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
    if (is_zero(c)) return x;
    SparseVec r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
            r.push_back(x[i++]);
        } else if (i == x.size() || y[j].index < x[i].index) {
            Rational v = c * y[j].value;
            r.push_back({y[j].index, std::move(v)});
            ++j;
        } else {
            Rational v = x[i].value + c * y[j].value;
            if (!is_zero(v)) r.push_back({x[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

Rational sv_get(const SparseVec& x, int index) {
    auto it = std::lower_bound(x.begin(), x.end(), index,
                               [](const SparseEntry& e, int idx) { return e.index < idx; });
    if (it != x.end() && it->index == index) return it->value;
    return Rational(0);
}

SparseVec sv_unit(int index) { return {{index, Rational(1)}}; }

SparseMat SparseMat::from_triplets(int nrows, int ncols,
                                   const std::vector<std::tuple<int, int, Rational>>& trips) {
    std::vector<std::map<int, Rational>> acc(nrows);
    for (const auto& [r, c, v] : trips) {
        if (r < 0 || r >= nrows || c < 0 || c >= ncols) throw std::out_of_range("triplet outside matrix");
        acc[r][c] += v;
    }
    SparseMat m(nrows, ncols);
    for (int i = 0; i < nrows; ++i) {
        SparseVec row;
        row.reserve(acc[i].size());
        for (auto& [c, v] : acc[i])
            if (!is_zero(v)) row.push_back({c, std::move(v)});
        m.set_row(i, std::move(row));
    }
    return m;
}

SparseMat SparseMat::transpose() const {
    std::vector<std::size_t> counts(ncols_, 0);
    for (const auto& r : rows_)
        for (const auto& e : r) ++counts[e.index];
    SparseMat t(ncols_, nrows_);
    std::vector<SparseVec> cols(ncols_);
    for (int j = 0; j < ncols_; ++j) cols[j].reserve(counts[j]);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& e : rows_[i]) cols[e.index].push_back({i, e.value});
    for (int j = 0; j < ncols_; ++j) t.set_row(j, std::move(cols[j]));
    return t;
}

SparseMat SparseMat::multiply(const SparseMat& o) const {
    if (ncols_ != o.nrows_) throw std::invalid_argument("sparse product shape mismatch");
    SparseMat r(nrows_, o.ncols_);
    for (int i = 0; i < nrows_; ++i) {
        std::map<int, Rational> acc;
        for (const auto& e : rows_[i])
            for (const auto& f : o.rows_[e.index]) acc[f.index] += e.value * f.value;
        SparseVec row;
        row.reserve(acc.size());
        for (auto& [c, v] : acc)
            if (!is_zero(v)) row.push_back({c, std::move(v)});
        r.set_row(i, std::move(row));
    }
    return r;
}

SparseVec SparseMat::multiply_vec(const SparseVec& x) const {
    SparseVec r;
    for (int i = 0; i < nrows_; ++i) {
        Rational acc(0);
        std::size_t a = 0, b = 0;
        const auto& row = rows_[i];
        while (a < row.size() && b < x.size()) {
            if (row[a].index < x[b].index)
                ++a;
            else if (x[b].index < row[a].index)
                ++b;
            else {
                acc += row[a].value * x[b].value;
                ++a;
                ++b;
            }
        }
        if (!is_zero(acc)) r.push_back({i, std::move(acc)});
    }
    return r;
}

SparseMat vstack(const SparseMat& a, const SparseMat& b) {
    if (a.ncols() != b.ncols()) throw std::invalid_argument("vstack column mismatch");
    SparseMat r(a.nrows() + b.nrows(), a.ncols());
    for (int i = 0; i < a.nrows(); ++i) r.set_row(i, a.row(i));
    for (int i = 0; i < b.nrows(); ++i) r.set_row(a.nrows() + i, b.row(i));
    return r;
}

SparseMat hstack(const SparseMat& a, const SparseMat& b) {
    if (a.nrows() != b.nrows()) throw std::invalid_argument("hstack row mismatch");
    SparseMat r(a.nrows(), a.ncols() + b.ncols());
    for (int i = 0; i < a.nrows(); ++i) {
        SparseVec row = a.row(i);
        for (const auto& e : b.row(i)) row.push_back({e.index + a.ncols(), e.value});
        r.set_row(i, std::move(row));
    }
    return r;
}

SparseMat column_slice(const SparseMat& a, int from, int to) {
    SparseMat r(a.nrows(), to - from);
    for (int i = 0; i < a.nrows(); ++i) {
        SparseVec row;
        for (const auto& e : a.row(i))
            if (e.index >= from && e.index < to) row.push_back({e.index - from, e.value});
        r.set_row(i, std::move(row));
    }
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct TaggedRow {
    SparseVec v;
    int tag;  // arrival order, breaks pivot ties deterministically
};

// Gauss-Jordan on one connected component. Pivot: among rows whose leading
// column is the current leftmost, the one with fewest entries (then lowest
// tag). The output rows are mutually reduced with unit pivots.
std::vector<SparseVec> eliminate_component(std::vector<TaggedRow> rows) {
    std::vector<SparseVec> done;
    while (!rows.empty()) {
        int lead = rows[0].v.front().index;
        for (const auto& r : rows) lead = std::min(lead, r.v.front().index);
        int best = -1;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i].v.front().index != lead) continue;
            if (best < 0 || rows[i].v.size() < rows[best].v.size() ||
                (rows[i].v.size() == rows[best].v.size() && rows[i].tag < rows[best].tag))
                best = i;
        }
        TaggedRow pivot = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        Rational inv_lead = 1 / pivot.v.front().value;
        pivot.v = sv_scale(pivot.v, inv_lead);

        auto clear_at = [&](SparseVec& target) {
            Rational c = sv_get(target, lead);
            if (!is_zero(c)) {
                Rational neg = -c;
                target = sv_axpy(target, neg, pivot.v);
            }
        };
        for (auto it = rows.begin(); it != rows.end();) {
            clear_at(it->v);
            if (it->v.empty())
                it = rows.erase(it);
            else
                ++it;
        }
        for (auto& d : done) clear_at(d);
        done.push_back(std::move(pivot.v));
    }
    std::sort(done.begin(), done.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.front().index < b.front().index; });
    return done;
}

}  // namespace

Rref rref(const SparseMat& m) {
    UnionFind uf(m.ncols());
    for (int i = 0; i < m.nrows(); ++i) {
        const auto& r = m.row(i);
        for (std::size_t j = 1; j < r.size(); ++j) uf.unite(r[0].index, r[j].index);
    }
    // Bucket rows by the component of their columns.
    std::map<int, std::vector<TaggedRow>> comps;
    for (int i = 0; i < m.nrows(); ++i) {
        const auto& r = m.row(i);
        if (r.empty()) continue;
        comps[uf.find(r[0].index)].push_back({r, i});
    }
    std::vector<SparseVec> all;
    for (auto& [root, rows] : comps) {
        auto reduced = eliminate_component(std::move(rows));
        all.insert(all.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
    }
    std::sort(all.begin(), all.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.front().index < b.front().index; });

    Rref out;
    out.rank = static_cast<int>(all.size());
    out.mat = SparseMat(out.rank, m.ncols());
    out.pivot_cols.reserve(all.size());
    for (int i = 0; i < out.rank; ++i) {
        out.pivot_cols.push_back(all[i].front().index);
        out.mat.set_row(i, std::move(all[i]));
    }
    return out;
}

int rank_of(const SparseMat& m) { return rref(m).rank; }

SparseMat nullspace(const SparseMat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.ncols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    SparseMat ns(0, m.ncols());
    for (int f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f]) continue;
        std::map<int, Rational> entries;
        entries[f] = Rational(1);
        for (int i = 0; i < r.rank; ++i) {
            Rational c = sv_get(r.mat.row(i), f);
            if (!is_zero(c)) entries[r.pivot_cols[i]] = -c;
        }
        SparseVec v;
        v.reserve(entries.size());
        for (auto& [idx, val] : entries) v.push_back({idx, std::move(val)});
        ns.append_row(std::move(v));
    }
    return rref(ns).mat;
}

SparseMat column_space(const SparseMat& m) { return rref(m.transpose()).mat; }

std::optional<SparseVec> solve_particular(const SparseMat& a, const SparseVec& b) {
    SparseMat aug(a.nrows(), a.ncols() + 1);
    for (int i = 0; i < a.nrows(); ++i) aug.set_row(i, a.row(i));
    for (const auto& e : b) {
        SparseVec row = aug.row(e.index);
        row.push_back({a.ncols(), e.value});
        aug.set_row(e.index, std::move(row));
    }
    Rref r = rref(aug);
    SparseVec x;
    for (int i = 0; i < r.rank; ++i) {
        if (r.pivot_cols[i] == a.ncols()) return std::nullopt;  // inconsistent
        Rational v = sv_get(r.mat.row(i), a.ncols());
        if (!is_zero(v)) x.push_back({r.pivot_cols[i], std::move(v)});
    }
    return x;
}

}  // namespace revnf
