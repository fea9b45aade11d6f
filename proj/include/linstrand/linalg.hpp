#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linstrand/field.hpp"

namespace linstrand {

/// Sparse vector: (index, coefficient) pairs, kept sorted by index with no
/// zero coefficients.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::Element>>;

template <class F>
void sort_sparse(const F& field, SparseVec<F>& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<F> out;
    out.reserve(v.size());
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second = field.add(out.back().second, e.second);
        else
            out.push_back(std::move(e));
    }
    std::size_t w = 0;
    for (std::size_t r = 0; r < out.size(); ++r) {
        if (field.is_zero(out[r].second)) continue;
        if (w != r) out[w] = std::move(out[r]);
        ++w;
    }
    out.resize(w);
    v = std::move(out);
}

/// r - c * s for sorted sparse vectors.
template <class F>
SparseVec<F> axpy_sub(const F& field, const SparseVec<F>& r,
                      const typename F::Element& c, const SparseVec<F>& s) {
    SparseVec<F> out;
    out.reserve(r.size() + s.size());
    auto a = r.begin();
    auto b = s.begin();
    while (a != r.end() && b != s.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.emplace_back(b->first, field.neg(field.mul(c, b->second)));
            ++b;
        } else {
            auto v = field.sub(a->second, field.mul(c, b->second));
            if (!field.is_zero(v)) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, r.end());
    for (; b != s.end(); ++b)
        out.emplace_back(b->first, field.neg(field.mul(c, b->second)));
    return out;
}

/// Incremental row echelon over F: rows are reduced against stored pivot
/// rows (pivot = least index, lead coefficient one) as they arrive. The
/// number of stored rows is the rank of everything fed so far.
template <class F>
class Echelon {
public:
    explicit Echelon(const F& field) : field_(field) {}

    /// Reduces `row` and stores the remainder when nonzero.
    /// Returns true iff the row increased the rank.
    bool add_row(SparseVec<F> row) {
        sort_sparse(field_, row);
        while (!row.empty()) {
            auto it = pivot_.find(row.front().first);
            if (it == pivot_.end()) break;
            row = axpy_sub(field_, row, row.front().second, rows_[it->second]);
        }
        if (row.empty()) return false;
        auto lead_inv = field_.inv(row.front().second);
        for (auto& e : row) e.second = field_.mul(lead_inv, e.second);
        pivot_.emplace(row.front().first, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// Fully reduces `row` without storing it; returns the remainder.
    SparseVec<F> reduce(SparseVec<F> row) const {
        sort_sparse(field_, row);
        std::size_t scan = 0;
        while (scan < row.size()) {
            auto it = pivot_.find(row[scan].first);
            if (it == pivot_.end()) {
                ++scan;
                continue;
            }
            auto coeff = row[scan].second;
            row = axpy_sub(field_, row, coeff, rows_[it->second]);
        }
        return row;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }

private:
    const F& field_;
    std::vector<SparseVec<F>> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_;
};

/// Straightforward dense row reduction; returns the rank and leaves the
/// matrix in echelon form. Used below small-size thresholds and as an
/// independent cross-check of the sparse path.
template <class F>
std::size_t dense_rank(const F& field, std::vector<std::vector<typename F::Element>>& m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && field.is_zero(m[sel][col])) ++sel;
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        auto inv = field.inv(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c)
            m[rank][c] = field.mul(inv, m[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || field.is_zero(m[r][col])) continue;
            auto f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = field.sub(m[r][c], field.mul(f, m[rank][c]));
        }
        ++rank;
    }
    return rank;
}

/// Kernel of a linear map presented column by column. Columns are sparse
/// vectors over an arbitrary row-index space; the builder tracks the linear
/// combinations that reduce to zero, which form a basis of the kernel.
template <class F>
class KernelBuilder {
public:
    explicit KernelBuilder(const F& field) : field_(field), ech_(field) {}

    static constexpr std::size_t kTrackBase = std::size_t(1) << 40;

    /// Feeds the next column; returns true iff it was independent of the
    /// columns fed before (i.e. increased the rank).
    bool add_column(const SparseVec<F>& rows_entries) {
        SparseVec<F> aug;
        aug.reserve(rows_entries.size() + 1);
        for (const auto& [row_id, c] : rows_entries)
            aug.emplace_back(local_row(row_id), c);
        aug.emplace_back(kTrackBase + n_cols_, field_.one());
        ++n_cols_;
        ech_.add_row(std::move(aug));
        return ech_.rows().back().front().first < kTrackBase;
    }

    std::size_t columns() const { return n_cols_; }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& row : ech_.rows())
            if (row.front().first < kTrackBase) ++r;
        return r;
    }

    std::size_t kernel_dimension() const { return n_cols_ - rank(); }

    /// Kernel basis vectors over column indices (in feeding order).
    std::vector<SparseVec<F>> kernel_basis() const {
        std::vector<SparseVec<F>> out;
        for (const auto& row : ech_.rows()) {
            if (row.front().first < kTrackBase) continue;
            SparseVec<F> v;
            v.reserve(row.size());
            for (const auto& [idx, c] : row) v.emplace_back(idx - kTrackBase, c);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t local_row(std::size_t row_id) {
        auto [it, fresh] = row_map_.emplace(row_id, row_map_.size());
        return it->second;
    }

    const F& field_;
    Echelon<F> ech_;
    std::unordered_map<std::size_t, std::size_t> row_map_;
    std::size_t n_cols_ = 0;
};

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

/// Rank accumulator for matrices that are block-diagonal with respect to a
/// grading key: rows with different keys cannot interact, so each block is
/// eliminated independently and the ranks add up.
template <class F>
class BlockedEchelon {
public:
    explicit BlockedEchelon(const F& field) : field_(field) {}

    bool add_row(const std::vector<std::uint32_t>& key, SparseVec<F> row) {
        auto it = blocks_.find(key);
        if (it == blocks_.end())
            it = blocks_.emplace(key, Echelon<F>(field_)).first;
        return it->second.add_row(std::move(row));
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& [k, e] : blocks_) r += e.rank();
        return r;
    }

private:
    const F& field_;
    std::unordered_map<std::vector<std::uint32_t>, Echelon<F>, VecHash> blocks_;
};

} // namespace linstrand
