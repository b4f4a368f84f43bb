#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "omega/errors.hpp"

namespace omega {

// Root-multiplicity pattern: an ordered composition of positive integers.
// The empty composition () is a first-class pattern (norm 0); it labels the
// stratum of polynomials without real roots.
class Pattern {
public:
    Pattern() = default;

    explicit Pattern(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 1) throw ValidationError("pattern entries must be positive integers");
    }

    const std::vector<int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // |ω| = Σ ω_i
    int norm() const {
        int n = 0;
        for (int e : entries_) n += e;
        return n;
    }

    // |ω|' = Σ (ω_i − 1); the codimension of the stratum labelled by ω.
    int reduced_norm() const { return norm() - support_size(); }

    // s_ω = |ω| − |ω|' = number of entries.
    int support_size() const { return static_cast<int>(entries_.size()); }

    int max_entry() const {
        int m = 0;
        for (int e : entries_) m = std::max(m, e);
        return m;
    }

    // M_i: sum the adjacent entries ω_i, ω_{i+1}.  i is 1-based, 1 ≤ i ≤ s−1.
    Pattern merge_at(int i) const {
        const int s = support_size();
        if (s < 2 || i < 1 || i > s - 1)
            throw ValidationError("merge_at: index " + std::to_string(i) +
                                  " out of range for support " + std::to_string(s));
        std::vector<int> out(entries_);
        out[static_cast<std::size_t>(i) - 1] += out[static_cast<std::size_t>(i)];
        out.erase(out.begin() + i);
        return Pattern(std::move(out));
    }

    // I_i: place a new entry 2 after position i.  i = 0 prepends, i = s appends.
    Pattern insert_at(int i) const {
        const int s = support_size();
        if (i < 0 || i > s)
            throw ValidationError("insert_at: index " + std::to_string(i) +
                                  " out of range for support " + std::to_string(s));
        std::vector<int> out(entries_);
        out.insert(out.begin() + i, 2);
        return Pattern(std::move(out));
    }

    // Canonical text form: "(1,2,1)", "()".  No whitespace; round-trips with parse.
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(entries_[i]);
        }
        s += ')';
        return s;
    }

    // Grammar: "(" int ("," int)* ")" | "()".  Entries are decimal integers ≥ 1,
    // so "(12)" is the single entry twelve.
    static Pattern parse(std::string_view text) {
        std::size_t pos = 0;
        auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, pos); };
        if (text.empty() || text[0] != '(') throw fail("expected '('");
        pos = 1;
        std::vector<int> entries;
        if (pos < text.size() && text[pos] == ')') {
            pos++;
        } else {
            for (;;) {
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw fail("expected digit");
                long value = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    value = value * 10 + (text[pos] - '0');
                    if (value > 1'000'000) throw fail("entry too large");
                    pos++;
                }
                if (value < 1) throw fail("entries must be >= 1");
                entries.push_back(static_cast<int>(value));
                if (pos >= text.size()) throw fail("expected ',' or ')'");
                if (text[pos] == ',') {
                    pos++;
                    continue;
                }
                if (text[pos] == ')') {
                    pos++;
                    break;
                }
                throw fail("expected ',' or ')'");
            }
        }
        if (pos != text.size()) throw fail("trailing characters after pattern");
        return Pattern(std::move(entries));
    }

    // Canonical order: (reduced norm, norm, lexicographic entries).  This key
    // fixes basis order inside every matrix this library builds.
    friend bool operator<(const Pattern& a, const Pattern& b) {
        int ra = a.reduced_norm(), rb = b.reduced_norm();
        if (ra != rb) return ra < rb;
        int na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        return a.entries_ < b.entries_;
    }
    friend bool operator==(const Pattern& a, const Pattern& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }

private:
    std::vector<int> entries_;
};

enum class ParityPolicy {
    matched,  // keep only |ω| ≡ d (mod 2) — the patterns that label strata of P_d
    all       // investigation mode: every norm ≤ d
};

inline bool parity_admits(const Pattern& p, int d, ParityPolicy policy) {
    return policy == ParityPolicy::all || (p.norm() - d) % 2 == 0;
}

// One-step order relations: everything obtainable from ω by a single merge or a
// single insert whose result still has norm ≤ d.  Distinct indices may yield
// equal patterns (runs of 2s); the set collapses them.
inline std::set<Pattern> elementary_successors(const Pattern& p, int d) {
    if (p.norm() > d) throw ValidationError("elementary_successors: norm exceeds " + std::to_string(d));
    std::set<Pattern> out;
    const int s = p.support_size();
    for (int i = 1; i <= s - 1; ++i) out.insert(p.merge_at(i));
    if (p.norm() + 2 <= d)
        for (int i = 0; i <= s; ++i) out.insert(p.insert_at(i));
    return out;
}

// All σ with op(σ) = ω for a single merge or insert: un-merge every entry ≥ 2
// into each two-part split, and delete every entry equal to 2.
inline std::set<Pattern> elementary_predecessors(const Pattern& p) {
    std::set<Pattern> out;
    const auto& e = p.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (int a = 1; a < e[i]; ++a) {
            std::vector<int> v(e.begin(), e.end());
            v[i] = a;
            v.insert(v.begin() + static_cast<long>(i) + 1, e[i] - a);
            out.insert(Pattern(std::move(v)));
        }
        if (e[i] == 2) {
            std::vector<int> v(e.begin(), e.end());
            v.erase(v.begin() + static_cast<long>(i));
            out.insert(Pattern(std::move(v)));
        }
    }
    return out;
}

// lo ⪯ hi: lo is reachable from hi by a (possibly empty) sequence of merges and
// inserts.  Norms never decrease along a path and the reduced norm grows by one
// per step, so the search is bounded by norm(lo) and reduced_norm(lo).
inline bool order_leq(const Pattern& lo, const Pattern& hi, int d) {
    if (lo.norm() > d || hi.norm() > d)
        throw ValidationError("order_leq: norms must not exceed " + std::to_string(d));
    if (lo == hi) return true;
    if (lo.reduced_norm() <= hi.reduced_norm() || lo.norm() < hi.norm()) return false;
    const int target_norm = lo.norm();
    const int target_rn = lo.reduced_norm();
    std::set<Pattern> seen{hi};
    std::deque<Pattern> queue{hi};
    while (!queue.empty()) {
        Pattern cur = queue.front();
        queue.pop_front();
        for (const Pattern& next : elementary_successors(cur, target_norm)) {
            if (next.reduced_norm() > target_rn) continue;
            if (next == lo) return true;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return false;
}

}  // namespace omega
