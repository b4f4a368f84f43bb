#pragma once

// Test-only oracles, written from scratch against the definitions and kept
// independent of the library code paths they check.  Everything here works on
// bare std::vector<int> compositions and dense matrices.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Composition = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

inline int norm(const Composition& w) {
    int n = 0;
    for (int e : w) n += e;
    return n;
}

inline int reduced_norm(const Composition& w) { return norm(w) - static_cast<int>(w.size()); }

// Every single-step image of w inside the norm-<=-d truncation.
inline std::set<Composition> one_step_images(const Composition& w, int d) {
    std::set<Composition> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Composition m;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (j == i) {
                m.push_back(w[i] + w[i + 1]);
            } else if (j == i + 1) {
                continue;
            } else {
                m.push_back(w[j]);
            }
        }
        out.insert(m);
    }
    if (norm(w) + 2 <= d) {
        for (std::size_t gap = 0; gap <= w.size(); ++gap) {
            Composition ins(w.begin(), w.begin() + static_cast<long>(gap));
            ins.push_back(2);
            ins.insert(ins.end(), w.begin() + static_cast<long>(gap), w.end());
            out.insert(ins);
        }
    }
    return out;
}

// Loop-to-fixpoint closure.
inline std::set<Composition> closure(const std::set<Composition>& seeds, int d) {
    std::set<Composition> closed(seeds);
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Composition> next(closed);
        for (const auto& w : closed)
            for (const auto& img : one_step_images(w, d))
                if (next.insert(img).second) grew = true;
        closed.swap(next);
    }
    return closed;
}

inline bool reachable(const Composition& from, const Composition& to, int d) {
    return closure({from}, d).count(to) != 0;
}

// All compositions of total n (2^{n−1} of them for n ≥ 1), plus () for n = 0.
inline std::vector<Composition> compositions_of(int n) {
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    std::vector<int> parts;
    // recursive cut placement
    struct Rec {
        int n;
        std::vector<Composition>& out;
        std::vector<int>& parts;
        void go(int rest) {
            if (rest == 0) {
                out.push_back(parts);
                return;
            }
            for (int first = 1; first <= rest; ++first) {
                parts.push_back(first);
                go(rest - first);
                parts.pop_back();
            }
        }
    } rec{n, out, parts};
    rec.go(n);
    return out;
}

inline std::vector<Composition> patterns_up_to(int d, bool matched_parity) {
    std::vector<Composition> out;
    for (int n = 0; n <= d; ++n) {
        if (matched_parity && (d - n) % 2 != 0) continue;
        for (auto& c : compositions_of(n)) out.push_back(std::move(c));
    }
    return out;
}

// Determinant-divisor Smith invariants: d_k = gcd of all k×k minors, and the
// k-th invariant factor is d_k / d_{k−1}.  Exponential, fine for tiny inputs.
inline BigInt det(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt sum = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        BigInt term = m[0][col] * det(minor);
        sum += (col % 2 == 0) ? term : -term;
    }
    return sum;
}

inline std::vector<BigInt> smith_invariants_by_minors(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    const std::size_t bound = std::min(rows, cols);
    std::vector<BigInt> dk;  // dk[k−1] = gcd of k×k minors
    for (std::size_t k = 1; k <= bound; ++k) {
        // all row/col index subsets of size k
        std::vector<std::size_t> ridx(k), cidx(k);
        BigInt g = 0;
        auto next_subset = [](std::vector<std::size_t>& idx, std::size_t n) -> bool {
            std::size_t k2 = idx.size();
            for (std::size_t i = k2; i-- > 0;) {
                if (idx[i] < n - k2 + i) {
                    idx[i]++;
                    for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        std::iota(ridx.begin(), ridx.end(), 0);
        bool more_rows = true;
        while (more_rows) {
            std::iota(cidx.begin(), cidx.end(), 0);
            bool more_cols = true;
            while (more_cols) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[ridx[i]][cidx[j]];
                g = gcd(g, det(sub));
                more_cols = next_subset(cidx, cols);
            }
            more_rows = next_subset(ridx, rows);
        }
        if (g == 0) break;
        dk.push_back(abs(g));
    }
    std::vector<BigInt> invariants;
    for (std::size_t k = 0; k < dk.size(); ++k)
        invariants.push_back(k == 0 ? dk[0] : dk[k] / dk[k - 1]);
    return invariants;
}

}  // namespace oracle
