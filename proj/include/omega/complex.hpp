#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omega/chain.hpp"
#include "omega/poset.hpp"

namespace omega {

// Triplet-form sparse integer matrix.  Entries are kept sorted by (col, row)
// so equal matrices compare equal and dumps are deterministic.
struct SparseMatrix {
    struct Entry {
        int row = 0;
        int col = 0;
        Int value;
        friend bool operator==(const Entry& a, const Entry& b) {
            return a.row == b.row && a.col == b.col && a.value == b.value;
        }
    };

    int rows = 0;
    int cols = 0;
    std::vector<Entry> entries;

    void add(int row, int col, Int value) {
        if (value != 0) entries.push_back({row, col, std::move(value)});
    }

    void sort_entries() {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
    }

    SparseMatrix transposed() const {
        SparseMatrix t;
        t.rows = cols;
        t.cols = rows;
        t.entries.reserve(entries.size());
        for (const Entry& e : entries) t.entries.push_back({e.col, e.row, e.value});
        t.sort_entries();
        return t;
    }

    // y = M x
    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols)
            throw ValidationError("SparseMatrix::apply: size mismatch");
        std::vector<Int> y(static_cast<std::size_t>(rows), Int(0));
        for (const Entry& e : entries) y[static_cast<std::size_t>(e.row)] += e.value * x[static_cast<std::size_t>(e.col)];
        return y;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

inline SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw ValidationError("sparse_product: inner dimensions differ");
    std::map<std::pair<int, int>, Int> acc;
    std::vector<std::vector<const SparseMatrix::Entry*>> b_by_row(
        static_cast<std::size_t>(b.rows));
    for (const auto& e : b.entries) b_by_row[static_cast<std::size_t>(e.row)].push_back(&e);
    // acc[r][c] += a[r][k] * b[k][c], walking a by its k = col index
    std::vector<std::vector<const SparseMatrix::Entry*>> a_by_col(
        static_cast<std::size_t>(a.cols));
    for (const auto& e : a.entries) a_by_col[static_cast<std::size_t>(e.col)].push_back(&e);
    for (int k = 0; k < a.cols; ++k)
        for (const auto* ae : a_by_col[static_cast<std::size_t>(k)])
            for (const auto* be : b_by_row[static_cast<std::size_t>(k)])
                acc[{ae->row, be->col}] += ae->value * be->value;
    SparseMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    for (const auto& [rc, v] : acc)
        if (v != 0) out.entries.push_back({rc.first, rc.second, v});
    out.sort_entries();
    return out;
}

enum class ComplexKind { sub, quotient, full, dual_sub, dual_quotient, dual_full };
enum class Direction { down, up };  // whether the stored maps lower or raise degree

inline const char* to_string(ComplexKind k) {
    switch (k) {
        case ComplexKind::sub: return "sub";
        case ComplexKind::quotient: return "quotient";
        case ComplexKind::full: return "full";
        case ComplexKind::dual_sub: return "dual-of(sub)";
        case ComplexKind::dual_quotient: return "dual-of(quotient)";
        case ComplexKind::dual_full: return "dual-of(full)";
    }
    return "?";
}

// Graded free Z-module with one basis pattern list per degree and one sparse
// matrix per degree for the map leaving that degree.  The degree of ω is
// d − |ω|'.  direction == down means boundary[n] : C_n → C_{n−1};
// direction == up means boundary[n] : C_n → C_{n+1} (a dualized complex).
struct GradedComplex {
    int d = 0;
    ParityPolicy policy = ParityPolicy::matched;
    ComplexKind kind = ComplexKind::sub;
    SignConvention convention = SignConvention::insert_plus;
    Direction direction = Direction::down;
    std::map<int, std::vector<Pattern>> basis;
    std::map<int, SparseMatrix> boundary;

    int basis_size(int degree) const {
        auto it = basis.find(degree);
        return it == basis.end() ? 0 : static_cast<int>(it->second.size());
    }

    // Matrix of the map leaving `degree`; zero-shaped when absent.
    SparseMatrix leaving(int degree) const {
        auto it = boundary.find(degree);
        if (it != boundary.end()) return it->second;
        SparseMatrix z;
        z.cols = basis_size(degree);
        z.rows = basis_size(direction == Direction::down ? degree - 1 : degree + 1);
        return z;
    }

    // Matrix of the map arriving into `degree`.
    SparseMatrix entering(int degree) const {
        return leaving(direction == Direction::down ? degree + 1 : degree - 1);
    }

    int index_of(int degree, const Pattern& p) const {
        auto it = basis.find(degree);
        if (it == basis.end()) return -1;
        auto pos = std::lower_bound(it->second.begin(), it->second.end(), p);
        if (pos == it->second.end() || *pos != p) return -1;
        return static_cast<int>(pos - it->second.begin());
    }

    std::vector<Int> coords_of(int degree, const Chain& chain) const {
        std::vector<Int> v(static_cast<std::size_t>(basis_size(degree)), Int(0));
        for (const auto& [p, c] : chain.terms()) {
            int i = index_of(degree, p);
            if (i < 0)
                throw ValidationError("coords_of: " + p.to_string() +
                                      " is not a basis pattern of degree " + std::to_string(degree));
            v[static_cast<std::size_t>(i)] = c;
        }
        return v;
    }

    // A stable text key for fingerprints and caching.
    std::string content_key() const {
        std::string s = "d=" + std::to_string(d) + ";policy=" +
                        (policy == ParityPolicy::matched ? "matched" : "all") +
                        ";kind=" + to_string(kind) + ";dir=" +
                        (direction == Direction::down ? "down" : "up") + ";conv=" +
                        (convention == SignConvention::insert_plus ? "+" : "-") + "\n";
        for (const auto& [n, pats] : basis) {
            s += "deg " + std::to_string(n) + ":";
            for (const auto& p : pats) s += " " + p.to_string();
            s += "\n";
        }
        for (const auto& [n, m] : boundary) {
            s += "bnd " + std::to_string(n) + " " + std::to_string(m.rows) + "x" +
                 std::to_string(m.cols) + ":";
            for (const auto& e : m.entries)
                s += " (" + std::to_string(e.row) + "," + std::to_string(e.col) + "," +
                     e.value.str() + ")";
            s += "\n";
        }
        return s;
    }
};

namespace detail {

// Assemble a down complex over `members`, mapping boundary terms through
// `project` (identity for sub complexes, Θ-deletion for quotients).
template <typename Project>
GradedComplex assemble_complex(int d, ParityPolicy policy, ComplexKind kind,
                               SignConvention convention, const std::vector<Pattern>& members,
                               Project project) {
    GradedComplex c;
    c.d = d;
    c.policy = policy;
    c.kind = kind;
    c.convention = convention;
    for (const Pattern& p : members) c.basis[d - p.reduced_norm()].push_back(p);
    for (auto& [n, pats] : c.basis) std::sort(pats.begin(), pats.end());

    for (const auto& [n, pats] : c.basis) {
        SparseMatrix m;
        m.cols = static_cast<int>(pats.size());
        m.rows = c.basis_size(n - 1);
        for (int j = 0; j < m.cols; ++j) {
            Chain b = boundary_chain(pats[static_cast<std::size_t>(j)], d, BoundaryVariant::full,
                                     convention, policy);
            for (const auto& [q, coeff] : b.terms()) {
                if (!project(q)) continue;
                int i = c.index_of(n - 1, q);
                if (i < 0)
                    throw ValidationError("complex assembly: boundary term " + q.to_string() +
                                          " of " + pats[static_cast<std::size_t>(j)].to_string() +
                                          " is missing from the basis (input set not closed?)");
                m.add(i, j, coeff);
            }
        }
        m.sort_entries();
        c.boundary[n] = std::move(m);
    }
    return c;
}

}  // namespace detail

// (Z[Θ], ∂): closure guarantees ∂ stays inside Z[Θ].  A non-closed input set
// is rejected with a witness.
inline GradedComplex build_sub_complex(const ClosedPoset& poset,
                                       SignConvention convention = SignConvention::insert_plus) {
    if (auto ce = closure_counterexample(poset.members(), poset.d()))
        throw ValidationError("build_sub_complex: set is not closed; " + ce->member.to_string() +
                              " is a member but its successor " +
                              ce->missing_successor.to_string() + " is not");
    return detail::assemble_complex(poset.d(), poset.policy(), ComplexKind::sub, convention,
                                    poset.members(), [](const Pattern&) { return true; });
}

// (Z[Θ^#], ∂^#): basis Ω_{⟨d]} ∖ Θ, boundary terms landing in Θ deleted.
inline GradedComplex build_quotient_complex(const ClosedPoset& poset,
                                            SignConvention convention = SignConvention::insert_plus) {
    std::vector<Pattern> rest;
    for (const Pattern& p : enumerate_patterns(poset.d(), poset.policy()))
        if (!poset.contains(p)) rest.push_back(p);
    return detail::assemble_complex(poset.d(), poset.policy(), ComplexKind::quotient, convention,
                                    rest, [&](const Pattern& q) { return !poset.contains(q); });
}

inline GradedComplex build_full_complex(int d, ParityPolicy policy = ParityPolicy::matched,
                                        SignConvention convention = SignConvention::insert_plus) {
    return detail::assemble_complex(d, policy, ComplexKind::full, convention,
                                    enumerate_patterns(d, policy),
                                    [](const Pattern&) { return true; });
}

// Same bases, transposed matrices; the dual differential raises the original
// degree.  Involution: dualizing twice restores the original matrices.
inline GradedComplex dualize_complex(const GradedComplex& c) {
    GradedComplex out;
    out.d = c.d;
    out.policy = c.policy;
    out.convention = c.convention;
    out.basis = c.basis;
    switch (c.kind) {
        case ComplexKind::sub: out.kind = ComplexKind::dual_sub; break;
        case ComplexKind::quotient: out.kind = ComplexKind::dual_quotient; break;
        case ComplexKind::full: out.kind = ComplexKind::dual_full; break;
        case ComplexKind::dual_sub: out.kind = ComplexKind::sub; break;
        case ComplexKind::dual_quotient: out.kind = ComplexKind::quotient; break;
        case ComplexKind::dual_full: out.kind = ComplexKind::full; break;
    }
    if (c.direction == Direction::down) {
        out.direction = Direction::up;
        // ∂_n : C_n → C_{n−1} transposes to δ_{n−1} : C*_{n−1} → C*_n
        for (const auto& [n, m] : c.boundary) out.boundary[n - 1] = m.transposed();
    } else {
        out.direction = Direction::down;
        for (const auto& [n, m] : c.boundary) out.boundary[n + 1] = m.transposed();
    }
    return out;
}

// Checks that consecutive stored maps compose to zero; names the first bad
// degree if not.
inline std::optional<int> square_zero_violation(const GradedComplex& c) {
    for (const auto& [n, m] : c.boundary) {
        const int prev = c.direction == Direction::down ? n - 1 : n + 1;
        auto it = c.boundary.find(prev);
        if (it == c.boundary.end()) continue;
        if (!sparse_product(it->second, m).entries.empty()) return n;
    }
    return std::nullopt;
}

struct DifferentialIdentityReport {
    int d = 0;
    bool merge_square_zero = true;
    bool insert_square_zero = true;
    bool anticommute = true;
    bool full_square_zero = true;
    std::optional<Pattern> witness;  // first generator violating any identity
    std::string detail;

    bool all_hold() const {
        return merge_square_zero && insert_square_zero && anticommute && full_square_zero;
    }
};

// Generator-by-generator check of ∂_M² = 0, ∂_I² = 0, ∂_M∂_I + ∂_I∂_M = 0 and
// ∂² = 0 on the whole parity-matched complex at level d, with the norm-≤-d
// truncation applied uniformly at every application.
inline DifferentialIdentityReport verify_complex(int d,
                                                 ParityPolicy policy = ParityPolicy::matched,
                                                 SignConvention convention = SignConvention::insert_plus) {
    DifferentialIdentityReport report;
    report.d = d;
    using BV = BoundaryVariant;
    auto twice = [&](const Pattern& p, BV outer, BV inner) {
        return boundary_of_chain(boundary_chain(p, d, inner, convention, policy), d, outer,
                                 convention, policy);
    };
    for (const Pattern& p : enumerate_patterns(d, policy)) {
        Chain mm = twice(p, BV::merge_only, BV::merge_only);
        Chain ii = twice(p, BV::insert_only, BV::insert_only);
        Chain mixed = twice(p, BV::merge_only, BV::insert_only) +
                      twice(p, BV::insert_only, BV::merge_only);
        Chain full = twice(p, BV::full, BV::full);
        bool bad = false;
        if (!mm.is_zero()) {
            report.merge_square_zero = false;
            bad = true;
        }
        if (!ii.is_zero()) {
            report.insert_square_zero = false;
            bad = true;
        }
        if (!mixed.is_zero()) {
            report.anticommute = false;
            bad = true;
        }
        if (!full.is_zero()) {
            report.full_square_zero = false;
            bad = true;
        }
        if (bad && !report.witness) {
            report.witness = p;
            report.detail = "first violation at generator " + p.to_string();
        }
    }
    return report;
}

}  // namespace omega
