#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omega/complex.hpp"

namespace omega {

struct SnfOptions {
    // Hard guard on intermediate entry growth; exceeding it aborts with
    // diagnostics instead of silently grinding.
    unsigned max_entry_bits = 1u << 16;
};

struct SnfResult {
    std::vector<Int> invariants;  // d_1 | d_2 | ... | d_r, all positive
    int rank = 0;
};

namespace detail {

inline unsigned bit_size(const Int& v) {
    if (v == 0) return 0;
    return boost::multiprecision::msb(abs(v)) + 1;
}

// Row-major sparse elimination over Z by unimodular row/column operations.
// Pivots are chosen by (unit value first, then minimal absolute value) with a
// Markowitz fill tiebreak; a remainder after a division step becomes the new
// pivot, so pivot magnitudes strictly decrease and every step terminates.
class SparseEliminator {
public:
    SparseEliminator(const SparseMatrix& m, const SnfOptions& options, std::vector<Int>* rhs)
        : nrows_(m.rows), ncols_(m.cols), options_(options), rhs_(rhs) {
        rows_.resize(static_cast<std::size_t>(nrows_));
        col_rows_.resize(static_cast<std::size_t>(ncols_));
        for (const auto& e : m.entries) {
            guard(e.value);
            rows_[static_cast<std::size_t>(e.row)][e.col] = e.value;
            col_rows_[static_cast<std::size_t>(e.col)].insert(e.row);
        }
        row_active_.assign(static_cast<std::size_t>(nrows_), true);
        col_active_.assign(static_cast<std::size_t>(ncols_), true);
        if (rhs_ && static_cast<int>(rhs_->size()) != nrows_)
            throw ValidationError("snf: right-hand side size mismatch");
    }

    struct Pivot {
        int row;
        int col;
        Int value;
    };

    std::vector<Pivot> run() {
        std::vector<Pivot> pivots;
        for (;;) {
            auto pick = find_pivot();
            if (!pick) break;
            auto [r, c] = *pick;
            settle_pivot(r, c);
            Int v = rows_[static_cast<std::size_t>(r)][c];
            pivots.push_back({r, c, v});
            rows_[static_cast<std::size_t>(r)].erase(c);
            col_rows_[static_cast<std::size_t>(c)].erase(r);
            row_active_[static_cast<std::size_t>(r)] = false;
            col_active_[static_cast<std::size_t>(c)] = false;
        }
        return pivots;
    }

private:
    void guard(const Int& v) const {
        if (bit_size(v) > options_.max_entry_bits)
            throw SnfOverflowError("snf: entry grew past " + std::to_string(options_.max_entry_bits) +
                                   " bits on a " + std::to_string(nrows_) + "x" +
                                   std::to_string(ncols_) + " matrix; raise SnfOptions::max_entry_bits");
    }

    std::optional<std::pair<int, int>> find_pivot() const {
        bool have = false;
        bool best_unit = false;
        Int best_abs;
        long best_fill = 0;
        int best_r = 0, best_c = 0;
        for (int r = 0; r < nrows_; ++r) {
            if (!row_active_[static_cast<std::size_t>(r)]) continue;
            const auto& row = rows_[static_cast<std::size_t>(r)];
            for (const auto& [c, v] : row) {
                Int a = abs(v);
                bool unit = a == 1;
                long fill = static_cast<long>(row.size() - 1) *
                            static_cast<long>(col_rows_[static_cast<std::size_t>(c)].size() - 1);
                bool better;
                if (!have) {
                    better = true;
                } else if (unit != best_unit) {
                    better = unit;
                } else if (unit) {
                    better = fill < best_fill;
                } else if (a != best_abs) {
                    better = a < best_abs;
                } else {
                    better = fill < best_fill;
                }
                if (better) {
                    have = true;
                    best_unit = unit;
                    best_abs = a;
                    best_fill = fill;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (!have) return std::nullopt;
        return std::make_pair(best_r, best_c);
    }

    // Nearest-integer quotient keeps remainders at most half the pivot.
    static Int nearest_quotient(const Int& w, const Int& v) {
        Int q = w / v;
        Int rem = w - q * v;
        if (abs(rem) * 2 > abs(v)) q += ((rem < 0) == (v < 0)) ? 1 : -1;
        return q;
    }

    void row_axpy(int dst, int src, const Int& factor) {
        if (factor == 0) return;
        auto& src_row = rows_[static_cast<std::size_t>(src)];
        auto& dst_row = rows_[static_cast<std::size_t>(dst)];
        for (const auto& [c, v] : src_row) {
            auto it = dst_row.find(c);
            if (it == dst_row.end()) {
                Int nv = factor * v;
                guard(nv);
                dst_row.emplace(c, std::move(nv));
                col_rows_[static_cast<std::size_t>(c)].insert(dst);
            } else {
                it->second += factor * v;
                guard(it->second);
                if (it->second == 0) {
                    dst_row.erase(it);
                    col_rows_[static_cast<std::size_t>(c)].erase(dst);
                }
            }
        }
        if (rhs_) {
            (*rhs_)[static_cast<std::size_t>(dst)] += factor * (*rhs_)[static_cast<std::size_t>(src)];
            guard((*rhs_)[static_cast<std::size_t>(dst)]);
        }
    }

    void col_axpy(int dst, int src, const Int& factor) {
        if (factor == 0) return;
        auto rows_with_src = col_rows_[static_cast<std::size_t>(src)];  // copy
        for (int r : rows_with_src) {
            auto& row = rows_[static_cast<std::size_t>(r)];
            Int v = row.at(src);
            auto it = row.find(dst);
            if (it == row.end()) {
                Int nv = factor * v;
                guard(nv);
                row.emplace(dst, std::move(nv));
                col_rows_[static_cast<std::size_t>(dst)].insert(r);
            } else {
                it->second += factor * v;
                guard(it->second);
                if (it->second == 0) {
                    row.erase(it);
                    col_rows_[static_cast<std::size_t>(dst)].erase(r);
                }
            }
        }
    }

    // Alternate column and row reduction around (r, c) until (r, c) is the only
    // entry in its row and column.  When a division leaves a remainder the
    // pivot moves onto it, shrinking |pivot|.
    void settle_pivot(int& r, int& c) {
        for (;;) {
            bool moved = false;
            // clear the pivot column with row operations
            for (;;) {
                int other = -1;
                for (int r2 : col_rows_[static_cast<std::size_t>(c)]) {
                    if (r2 != r) {
                        other = r2;
                        break;
                    }
                }
                if (other < 0) break;
                const Int v = rows_[static_cast<std::size_t>(r)].at(c);
                const Int w = rows_[static_cast<std::size_t>(other)].at(c);
                Int q = nearest_quotient(w, v);
                row_axpy(other, r, -q);
                auto it = rows_[static_cast<std::size_t>(other)].find(c);
                if (it != rows_[static_cast<std::size_t>(other)].end()) {
                    r = other;  // smaller remainder becomes the pivot
                    moved = true;
                }
            }
            // clear the pivot row with column operations (they only touch row r
            // now, the column being clean)
            for (;;) {
                int other = -1;
                for (const auto& [c2, v2] : rows_[static_cast<std::size_t>(r)]) {
                    if (c2 != c) {
                        other = c2;
                        break;
                    }
                }
                if (other < 0) break;
                const Int v = rows_[static_cast<std::size_t>(r)].at(c);
                const Int w = rows_[static_cast<std::size_t>(r)].at(other);
                Int q = nearest_quotient(w, v);
                col_axpy(other, c, -q);
                if (rows_[static_cast<std::size_t>(r)].count(other)) {
                    c = other;  // pivot moves; its new column may be dirty
                    moved = true;
                    break;
                }
            }
            if (!moved && col_rows_[static_cast<std::size_t>(c)].size() == 1 &&
                rows_[static_cast<std::size_t>(r)].size() == 1)
                break;
        }
    }

    int nrows_, ncols_;
    SnfOptions options_;
    std::vector<std::map<int, Int>> rows_;
    std::vector<std::set<int>> col_rows_;
    std::vector<bool> row_active_, col_active_;
    std::vector<Int>* rhs_;
};

inline std::vector<Int> fix_divisibility(std::vector<Int> vals) {
    for (auto& v : vals) v = abs(v);
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            for (std::size_t j = i + 1; j < vals.size(); ++j) {
                if (vals[j] % vals[i] != 0) {
                    Int g = gcd(vals[i], vals[j]);
                    Int l = vals[i] / g * vals[j];
                    vals[i] = g;
                    vals[j] = l;
                    changed = true;
                }
            }
        }
    }
    return vals;
}

}  // namespace detail

// Exact Smith normal form: nonzero invariant factors d_1 | d_2 | ... | d_r and
// the rank r.  Pure integer arithmetic throughout; entry growth is bounded by
// the configurable bit guard.
inline SnfResult smith_normal_form(const SparseMatrix& m, const SnfOptions& options = {}) {
    detail::SparseEliminator elim(m, options, nullptr);
    auto pivots = elim.run();
    std::vector<Int> diag;
    diag.reserve(pivots.size());
    for (const auto& p : pivots) diag.push_back(p.value);
    SnfResult result;
    result.invariants = detail::fix_divisibility(std::move(diag));
    result.rank = static_cast<int>(result.invariants.size());
    return result;
}

// Integral solvability of M x = b.  Row operations and the final diagonal
// divisibility test mirror onto b; column operations only reparametrize x.
inline bool solvable_in_image(const SparseMatrix& m, std::vector<Int> b,
                              const SnfOptions& options = {}) {
    detail::SparseEliminator elim(m, options, &b);
    auto pivots = elim.run();
    std::vector<bool> pivot_row(static_cast<std::size_t>(m.rows), false);
    for (const auto& p : pivots) {
        pivot_row[static_cast<std::size_t>(p.row)] = true;
        if (b[static_cast<std::size_t>(p.row)] % p.value != 0) return false;
    }
    for (int r = 0; r < m.rows; ++r)
        if (!pivot_row[static_cast<std::size_t>(r)] && b[static_cast<std::size_t>(r)] != 0)
            return false;
    return true;
}

}  // namespace omega
