#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "omega/homology.hpp"
#include "omega/poset.hpp"

namespace omega {

// Exact rational with tiny operands; ψ_Θ can be a half-integer under the
// all-parity policy, and range cutoffs are compared without rounding.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw ValidationError("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator-(long long a, const Rational& b) {
        return Rational(a * b.den - b.num, b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<=(long long a, const Rational& b) { return a * b.den <= b.num; }
    friend bool operator<(const Rational& a, long long b) { return a.num < b * a.den; }
    friend bool operator>=(long long a, const Rational& b) { return a * b.den >= b.num; }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct EulerReport {
    long long chi = 0;            // χ of the differential complex (Z[Θ], ∂)
    long long abs_euler = 0;      // A = |χ|
    long long chi_compactified = 0;  // χ(P̄_d^Θ) = χ + 1 (the added point)
    std::map<int, long long> cells_by_degree;
};

// χ = Σ_{ω∈Θ} (−1)^{d − |ω|'}, a pure cell census.
inline EulerReport euler_number(const ClosedPoset& poset) {
    EulerReport r;
    for (const Pattern& p : poset.members()) {
        int degree = poset.degree_of(p);
        r.cells_by_degree[degree]++;
        r.chi += (degree % 2 == 0) ? 1 : -1;
    }
    r.abs_euler = r.chi < 0 ? -r.chi : r.chi;
    r.chi_compactified = r.chi + 1;
    return r;
}

struct StabilityQuantities {
    long long eta = 0;  // max over maximal elements of (|ω| − 2|ω|')
    Rational psi;       // (d + η)/2
    Rational xi;        // d − ψ, at the same d
    std::vector<Pattern> maximal_elements_used;
};

inline StabilityQuantities stability_quantities(const ClosedPoset& poset) {
    if (poset.empty())
        throw ValidationError("stability_quantities: poset is empty");
    StabilityQuantities q;
    q.maximal_elements_used = maximal_elements(poset);
    bool first = true;
    for (const Pattern& p : q.maximal_elements_used) {
        long long v = p.norm() - 2ll * p.reduced_norm();
        if (first || v > q.eta) {
            q.eta = v;
            first = false;
        }
    }
    q.psi = Rational(poset.d() + q.eta, 2);
    q.xi = poset.d() - q.psi;
    return q;
}

namespace detail {

// H_{d−j}(quotient) is the unreduced H^0 of the complement at j = 0 (it always
// carries one free unit per component, at least one when the quotient is
// nonempty); the reduced tables drop a single Z there.
inline HomologyTable reduce_degree_zero(HomologyTable table, int d, bool quotient_nonempty) {
    if (!quotient_nonempty) return table;
    auto it = table.groups.find(d);
    if (it == table.groups.end() || it->second.rank < 1)
        throw InternalError("complement table: expected a free unit in the j = 0 slot");
    it->second.rank -= 1;
    if (it->second.is_zero()) table.groups.erase(it);
    return table;
}

}  // namespace detail

// H̃^j(P_d^{cΘ}; Z) ≈ H_{d−j}(∂^# : Z[Θ^#] → Z[Θ^#]).  The table is indexed by
// the cohomological degree j ∈ [0, d].
inline HomologyTable complement_cohomology(const ClosedPoset& poset,
                                           SignConvention convention = SignConvention::insert_plus,
                                           const SnfOptions& options = {}) {
    GradedComplex q = build_quotient_complex(poset, convention);
    bool nonempty = !q.basis.empty();
    HomologyTable h = detail::reduce_degree_zero(complex_homology(q, options), poset.d(), nonempty);
    HomologyTable out;
    out.fingerprint = h.fingerprint;
    for (const auto& [n, g] : h.groups) out.groups[poset.d() - n] = g;
    return out;
}

// H̃_j(P_d^{cΘ}; Z) ≈ H_{d−j}((∂^#)* : Z[Θ^#]* → Z[Θ^#]*), computed on the
// dualized quotient complex as an independent route.
inline HomologyTable complement_homology(const ClosedPoset& poset,
                                         SignConvention convention = SignConvention::insert_plus,
                                         const SnfOptions& options = {}) {
    GradedComplex q = dualize_complex(build_quotient_complex(poset, convention));
    bool nonempty = !q.basis.empty();
    HomologyTable h = detail::reduce_degree_zero(complex_homology(q, options), poset.d(), nonempty);
    HomologyTable out;
    out.fingerprint = h.fingerprint;
    for (const auto& [n, g] : h.groups) out.groups[poset.d() - n] = g;
    return out;
}

struct DegreeComparison {
    int j = 0;
    HomologyGroup lhs;  // at d
    HomologyGroup rhs;  // at d + 2
    bool in_certified_range = false;
    bool agree = false;
};

struct StabilizationStep {
    int d_from = 0;
    int d_to = 0;
    long long eta = 0;
    Rational psi;  // ψ_Θ(d+2)
    Rational xi;   // ξ_Θ(d+2) = d+2 − ψ_Θ(d+2)
    std::vector<DegreeComparison> complement;    // H̃_j(P^{cΘ}), certified j ≤ ξ
    std::vector<DegreeComparison> compactified;  // H̃_j(P̄^Θ) vs H̃_{j+2}, certified j ≥ ψ−1
    bool pass = true;                            // no in-range disagreement
    std::string finding;                         // populated on failure
};

struct StabilizationReport {
    int d = 0;
    int d_prime = 0;
    std::vector<StabilizationStep> steps;
    bool pass = true;
};

// Rebuilds Θ at each even level: family descriptors are re-evaluated (the
// truncation of the same infinite poset), generator-style descriptors are
// closed at the new level (= the lift, closure being monotone and idempotent).
inline ClosedPoset poset_at_level(const PosetSpec& spec, int d, ParityPolicy policy) {
    return build_poset(spec, d, policy);
}

inline StabilizationReport stabilization_report(const PosetSpec& spec, int d, int d_prime,
                                                ParityPolicy policy = ParityPolicy::matched,
                                                const SnfOptions& options = {}) {
    if (d_prime < d) throw ValidationError("stabilization_report: d' must be >= d");
    if ((d_prime - d) % 2 != 0)
        throw ValidationError("stabilization_report: d' must have the parity of d");
    StabilizationReport report;
    report.d = d;
    report.d_prime = d_prime;
    for (int e = d; e + 2 <= d_prime; e += 2) {
        ClosedPoset theta_lo = poset_at_level(spec, e, policy);
        ClosedPoset theta_hi = poset_at_level(spec, e + 2, policy);
        StabilizationStep step;
        step.d_from = e;
        step.d_to = e + 2;
        StabilityQuantities sq = stability_quantities(theta_hi);
        step.eta = sq.eta;
        step.psi = sq.psi;
        step.xi = sq.xi;

        HomologyTable comp_lo = complement_homology(theta_lo, SignConvention::insert_plus, options);
        HomologyTable comp_hi = complement_homology(theta_hi, SignConvention::insert_plus, options);
        for (int j = 0; j <= e + 2; ++j) {
            DegreeComparison cmp;
            cmp.j = j;
            cmp.lhs = comp_lo.at(j);
            cmp.rhs = comp_hi.at(j);
            cmp.in_certified_range = (j <= step.xi);
            cmp.agree = cmp.lhs == cmp.rhs;
            if (cmp.lhs.is_zero() && cmp.rhs.is_zero() && !cmp.in_certified_range) continue;
            step.complement.push_back(cmp);
            if (cmp.in_certified_range && !cmp.agree) step.pass = false;
        }

        HomologyTable sub_lo = complex_homology(build_sub_complex(theta_lo), options);
        HomologyTable sub_hi = complex_homology(build_sub_complex(theta_hi), options);
        for (int j = 0; j <= e + 2; ++j) {
            DegreeComparison cmp;
            cmp.j = j;
            cmp.lhs = sub_lo.at(j);
            cmp.rhs = sub_hi.at(j + 2);
            cmp.in_certified_range = (j + 1 >= step.psi);  // j ≥ ψ − 1
            cmp.agree = cmp.lhs == cmp.rhs;
            if (cmp.lhs.is_zero() && cmp.rhs.is_zero() && !cmp.in_certified_range) continue;
            step.compactified.push_back(cmp);
            if (cmp.in_certified_range && !cmp.agree) step.pass = false;
        }

        if (!step.pass) {
            report.pass = false;
            std::string what;
            for (const auto& cmp : step.complement)
                if (cmp.in_certified_range && !cmp.agree)
                    what += (what.empty() ? "" : "; ") + std::string("complement H_") +
                            std::to_string(cmp.j) + ": " + cmp.lhs.to_string() + " vs " +
                            cmp.rhs.to_string();
            for (const auto& cmp : step.compactified)
                if (cmp.in_certified_range && !cmp.agree)
                    what += (what.empty() ? "" : "; ") + std::string("compactified H_") +
                            std::to_string(cmp.j) + " vs H_" + std::to_string(cmp.j + 2) + ": " +
                            cmp.lhs.to_string() + " vs " + cmp.rhs.to_string();
            step.finding = "in-range disagreement between d = " + std::to_string(e) + " and " +
                           std::to_string(e + 2) + " (psi = " + step.psi.to_string() + ", xi = " +
                           step.xi.to_string() + "): " + what;
        }
        report.steps.push_back(std::move(step));
    }
    return report;
}

struct BouquetReport {
    int d = 0, k = 0, q = 0;
    long long census_chi = 0;
    long long abs_euler = 0;
    int expected_degree = 0;  // d − k
    bool torsion_free = true;
    bool concentrated = true;
    long long rank_at_expected = 0;
    bool rank_matches_euler = true;
    bool pass = false;
    HomologyTable homology;
};

// Sub-complex homology of Ω^{(q)}_{|∼|′≥k} must be free and concentrated in
// degree d − k with rank A(d, k, q); χ comes from the independent cell census.
inline BouquetReport bouquet_check(int d, int k, int q,
                                   ParityPolicy policy = ParityPolicy::matched,
                                   const SnfOptions& options = {}) {
    if (k < 1 || k >= d) throw ValidationError("bouquet_check: need 1 <= k < d");
    if (q < 0 || q > d) throw ValidationError("bouquet_check: need 0 <= q <= d");
    if (policy == ParityPolicy::matched && (q - d) % 2 != 0)
        throw ValidationError("bouquet_check: q must have the parity of d");
    BouquetReport r;
    r.d = d;
    r.k = k;
    r.q = q;
    r.expected_degree = d - k;
    ClosedPoset theta = build_poset(PosetSpec::reduced_norm_at_least(k, q), d, policy);
    EulerReport euler = euler_number(theta);
    r.census_chi = euler.chi;
    r.abs_euler = euler.abs_euler;
    r.homology = complex_homology(build_sub_complex(theta), options);
    for (const auto& [n, g] : r.homology.groups) {
        if (!g.torsion.empty()) r.torsion_free = false;
        if (n != r.expected_degree && !g.is_zero()) r.concentrated = false;
    }
    r.rank_at_expected = r.homology.at(r.expected_degree).rank;
    r.rank_matches_euler = (r.rank_at_expected == r.abs_euler);
    r.pass = r.torsion_free && r.concentrated && r.rank_matches_euler;
    return r;
}

struct CodimensionReport {
    int min_reduced_norm = 0;
    int max_reduced_norm_over_maximal = 0;
    int max_reduced_norm = 0;
};

// Both readings of "codimension of P_d^Θ" are exposed: the stratum R^ω has
// codimension |ω|', a union's codimension is the minimum, and the maximum is
// what the source formula names.  No interpretation is baked in.
inline CodimensionReport codimension_report(const ClosedPoset& poset) {
    if (poset.empty()) throw ValidationError("codimension_report: poset is empty");
    CodimensionReport r;
    r.min_reduced_norm = poset.members().front().reduced_norm();
    r.max_reduced_norm = poset.members().front().reduced_norm();
    for (const Pattern& p : poset.members()) {
        r.min_reduced_norm = std::min(r.min_reduced_norm, p.reduced_norm());
        r.max_reduced_norm = std::max(r.max_reduced_norm, p.reduced_norm());
    }
    r.max_reduced_norm_over_maximal = 0;
    bool first = true;
    for (const Pattern& p : maximal_elements(poset)) {
        if (first || p.reduced_norm() > r.max_reduced_norm_over_maximal)
            r.max_reduced_norm_over_maximal = p.reduced_norm();
        first = false;
    }
    return r;
}

}  // namespace omega
