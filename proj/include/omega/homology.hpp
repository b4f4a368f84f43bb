#pragma once

#include <map>
#include <string>
#include <vector>

#include "omega/complex.hpp"
#include "omega/sha256.hpp"
#include "omega/snf.hpp"

namespace omega {

struct HomologyGroup {
    long long rank = 0;
    std::vector<Int> torsion;  // each > 1, divisibility chain t_1 | t_2 | ...

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (rank == 1) s = "Z";
        else if (rank > 1) s = "Z^" + std::to_string(rank);
        for (const auto& t : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + t.str();
        }
        return s;
    }
};

struct HomologyTable {
    std::map<int, HomologyGroup> groups;  // degrees with a nonzero group only
    std::string fingerprint;              // content hash of the source complex

    HomologyGroup at(int degree) const {
        auto it = groups.find(degree);
        return it == groups.end() ? HomologyGroup{} : it->second;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (const auto& [n, g] : groups) chi += (n % 2 == 0 ? 1 : -1) * g.rank;
        return chi;
    }

    friend bool operator==(const HomologyTable& a, const HomologyTable& b) {
        return a.groups == b.groups;
    }
};

// Exact integer homology of a graded complex, degree by degree:
//   rank H_n = dim C_n − rank(leaving n) − rank(entering n)
//   torsion H_n = invariant factors > 1 of the entering matrix.
// Works for both directions (a dualized complex enters from degree n−1).
inline HomologyTable complex_homology(const GradedComplex& c, const SnfOptions& options = {}) {
    if (auto bad = square_zero_violation(c))
        throw InternalError("complex_homology: differential does not square to zero at degree " +
                            std::to_string(*bad));
    HomologyTable table;
    table.fingerprint = sha256_hex(c.content_key());
    std::map<int, SnfResult> snf_by_degree;  // keyed by source degree of the map
    auto snf_of = [&](int degree) -> const SnfResult& {
        auto it = snf_by_degree.find(degree);
        if (it == snf_by_degree.end())
            it = snf_by_degree.emplace(degree, smith_normal_form(c.leaving(degree), options)).first;
        return it->second;
    };
    for (const auto& [n, pats] : c.basis) {
        const int entering_degree = c.direction == Direction::down ? n + 1 : n - 1;
        const SnfResult& leave = snf_of(n);
        SnfResult enter;
        if (c.basis.count(entering_degree)) enter = snf_of(entering_degree);
        HomologyGroup g;
        g.rank = static_cast<long long>(pats.size()) - leave.rank - enter.rank;
        if (g.rank < 0)
            throw InternalError("complex_homology: negative rank at degree " + std::to_string(n));
        for (const auto& t : enter.invariants)
            if (t > 1) g.torsion.push_back(t);
        if (!g.is_zero()) table.groups[n] = g;
    }
    return table;
}

// Is the given degree-n coordinate vector a cycle of the complex?
inline bool is_cycle(const GradedComplex& c, int degree, const std::vector<Int>& coords) {
    auto image = c.leaving(degree).apply(coords);
    for (const auto& v : image)
        if (v != 0) return false;
    return true;
}

// Is the given degree-n vector a boundary, i.e. integrally in the image of the
// map entering that degree?
inline bool is_boundary(const GradedComplex& c, int degree, const std::vector<Int>& coords,
                        const SnfOptions& options = {}) {
    return solvable_in_image(c.entering(degree), coords, options);
}

}  // namespace omega
