#pragma once

#include <map>
#include <string>
#include <vector>

#include "omega/invariants.hpp"

namespace omega {

// The boundary cycle ∂R̄^ω together with its ambient complex data.  The chain
// is a ∂-cycle in Z[ω_≻] and is ∂ of the generator in Z[ω_⪰]; in Z[ω_≻] it
// sits in the top grading d − |ω|' − 1, so it is nontrivial exactly when it is
// nonzero there.
struct ThetaDatum {
    Pattern omega;
    int d = 0;
    Chain boundary;             // ∂ω at level d, Eq-style signs (∂_M + ∂_I)
    Chain merge_part;           // ∂_M ω, whose signs both conventions share
    Chain insert_part;          // ∂_I ω under the insert_plus convention
    ClosedPoset ambient;        // ω_≻
    int witness_class_degree = 0;  // d − |ω|' − 1
    bool boundary_is_cycle = false;
    bool boundary_is_boundary_below_or_equal = false;  // ∂(generator) in Z[ω_⪰]
    bool nontrivial = false;
};

inline ThetaDatum theta_chain(const Pattern& p, int d,
                              ParityPolicy policy = ParityPolicy::matched,
                              const SnfOptions& options = {}) {
    if (p.empty()) throw ValidationError("theta_chain: the empty pattern has no boundary class");
    if (p.reduced_norm() < 1)
        throw ValidationError("theta_chain: " + p.to_string() + " has reduced norm 0");
    if (p.norm() > d) throw ValidationError("theta_chain: norm exceeds d");
    if (!parity_admits(p, d, policy))
        throw ValidationError("theta_chain: wrong norm parity for d = " + std::to_string(d));

    ThetaDatum t{p,
                 d,
                 boundary_chain(p, d, BoundaryVariant::full),
                 boundary_chain(p, d, BoundaryVariant::merge_only),
                 boundary_chain(p, d, BoundaryVariant::insert_only),
                 build_poset(PosetSpec::strictly_below(p), d, policy)};
    t.witness_class_degree = d - p.reduced_norm() - 1;

    GradedComplex below = build_sub_complex(t.ambient);
    if (t.boundary.is_zero()) {
        t.boundary_is_cycle = true;  // vacuously; happens only when ∂ω truncates away
        t.nontrivial = false;
    } else {
        auto coords = below.coords_of(t.witness_class_degree, t.boundary);
        t.boundary_is_cycle = is_cycle(below, t.witness_class_degree, coords);
        t.nontrivial =
            t.boundary_is_cycle && !is_boundary(below, t.witness_class_degree, coords, options);
    }

    ClosedPoset at_or_below = build_poset(PosetSpec::at_or_below(p), d, policy);
    GradedComplex closed = build_sub_complex(at_or_below);
    const int n = d - p.reduced_norm();
    Chain unit;
    unit.add(p, 1);
    auto image = closed.leaving(n).apply(closed.coords_of(n, unit));
    auto expected = closed.coords_of(n - 1, t.boundary);
    t.boundary_is_boundary_below_or_equal = (image == expected);
    return t;
}

// The generator ω as a ∂^#-cycle of the quotient complex Ω/ω_≻ (all of ∂ω lies
// in ω_≻), with an SNF image-membership test for nontriviality.
struct ThetaDualClass {
    Pattern omega;
    int d = 0;
    int degree = 0;  // d − |ω|'
    bool is_cycle = false;
    bool nontrivial = false;
};

inline ThetaDualClass theta_dual_class(const Pattern& p, int d,
                                       ParityPolicy policy = ParityPolicy::matched,
                                       const SnfOptions& options = {}) {
    if (p.empty()) throw ValidationError("theta_dual_class: the empty pattern is excluded");
    if (p.reduced_norm() < 1)
        throw ValidationError("theta_dual_class: " + p.to_string() + " has reduced norm 0");
    if (p.norm() > d) throw ValidationError("theta_dual_class: norm exceeds d");
    if (!parity_admits(p, d, policy))
        throw ValidationError("theta_dual_class: wrong norm parity for d = " + std::to_string(d));
    ThetaDualClass out{p, d, d - p.reduced_norm()};
    ClosedPoset below = build_poset(PosetSpec::strictly_below(p), d, policy);
    GradedComplex quotient = build_quotient_complex(below);
    Chain unit;
    unit.add(p, 1);
    auto coords = quotient.coords_of(out.degree, unit);
    out.is_cycle = is_cycle(quotient, out.degree, coords);
    out.nontrivial = out.is_cycle && !is_boundary(quotient, out.degree, coords, options);
    return out;
}

// Pairing of the dual class of ω against a formal cycle of the dual quotient
// complex: a functional φ on the degree-(d−|ω|') quotient basis with
// φ ∘ ∂^# = 0 evaluates on the class of ω as its ω-coefficient.  This is the
// integer-linear-algebra face of the trajectory count ⟨Φ*(θ_ω), [Y]⟩.
inline Int theta_pairing(const Pattern& p, int d, const Chain& functional,
                         ParityPolicy policy = ParityPolicy::matched) {
    if (p.norm() > d || !parity_admits(p, d, policy))
        throw ValidationError("theta_pairing: invalid pattern for d = " + std::to_string(d));
    ClosedPoset below = build_poset(PosetSpec::strictly_below(p), d, policy);
    GradedComplex quotient = build_quotient_complex(below);
    const int n = d - p.reduced_norm();
    auto coords = quotient.coords_of(n, functional);
    // cocycle condition: φ kills every ∂^# image from one degree up
    SparseMatrix entering = quotient.entering(n);
    for (int col = 0; col < entering.cols; ++col) {
        Int pairing = 0;
        for (const auto& e : entering.entries)
            if (e.col == col) pairing += e.value * coords[static_cast<std::size_t>(e.row)];
        if (pairing != 0)
            throw ValidationError("theta_pairing: the given functional is not a cocycle");
    }
    return functional.coefficient(p);
}

// The alternating merge chain of (1, 2, ..., 2, 1) with n twos at d = 2n + 2,
// where every insert truncates: Σ_{k=1}^{n+1} (−1)^{k+1} M_k.
inline Chain chain_1221(int n) {
    if (n < 1) throw ValidationError("chain_1221: n must be positive");
    std::vector<int> entries(static_cast<std::size_t>(n) + 2, 2);
    entries.front() = entries.back() = 1;
    Pattern omega(entries);
    const int d = 2 * n + 2;
    Chain formula;
    for (int k = 1; k <= n + 1; ++k) formula.add(omega.merge_at(k), (k % 2 == 1) ? 1 : -1);
    Chain from_boundary = boundary_chain(omega, d, BoundaryVariant::full);
    if (!(formula == from_boundary))
        throw InternalError("chain_1221: closed formula disagrees with the boundary operator");
    return formula;
}

// Graded ring on generators e_m of degree m(k−2), m ≤ ⌊d/k⌋, with the binomial
// relations; e_0 is the unit.  Products beyond index ⌊d/k⌋ vanish.
struct VassilievElement {
    int d = 0;
    int k = 0;
    std::map<int, Int> coeffs;  // index m → coefficient; zeros never stored

    int max_index() const { return d / k; }

    static VassilievElement unit(int d, int k) { return generator(d, k, 0); }

    static VassilievElement generator(int d, int k, int m) {
        if (k < 3) throw ValidationError("Vassiliev ring: k must be at least 3");
        if (d < k || d % 2 != 0) throw ValidationError("Vassiliev ring: need even d >= k");
        if (m < 0 || m > d / k)
            throw ValidationError("Vassiliev ring: index " + std::to_string(m) +
                                  " out of range, max is " + std::to_string(d / k));
        VassilievElement e{d, k, {}};
        e.coeffs[m] = 1;
        return e;
    }

    friend bool operator==(const VassilievElement& a, const VassilievElement& b) {
        return a.d == b.d && a.k == b.k && a.coeffs == b.coeffs;
    }
};

namespace detail {

inline Int binomial(int n, int r) {
    Int out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

// Structure constant of e_a · e_b before truncation.
//   k even: binom(a+b, a) e_{a+b}
//   k odd:  odd·odd = 0;  e_{2l}·e_{2m} = binom(l+m, l) e_{2l+2m};
//           e_{2l+1}·e_{2m} = binom(l+m, l) e_{2l+2m+1}.
inline Int vassiliev_structure(int k, int a, int b) {
    if (k % 2 == 0) return binomial(a + b, a);
    if (a % 2 == 1 && b % 2 == 1) return 0;
    return binomial(a / 2 + b / 2, a / 2);
}

}  // namespace detail

inline VassilievElement vassiliev_mul(const VassilievElement& x, const VassilievElement& y) {
    if (x.d != y.d || x.k != y.k)
        throw ValidationError("vassiliev_mul: factors live in different rings");
    VassilievElement out{x.d, x.k, {}};
    const int cap = x.max_index();
    for (const auto& [a, ca] : x.coeffs) {
        for (const auto& [b, cb] : y.coeffs) {
            if (a + b > cap) continue;  // the ring vanishes above degree (k−2)⌊d/k⌋
            Int c = detail::vassiliev_structure(x.k, a, b) * ca * cb;
            if (c == 0) continue;
            auto it = out.coeffs.find(a + b);
            if (it == out.coeffs.end())
                out.coeffs.emplace(a + b, c);
            else {
                it->second += c;
                if (it->second == 0) out.coeffs.erase(it);
            }
        }
    }
    return out;
}

struct ArnoldDegreeVerdict {
    int j = 0;
    long long expected_rank = 0;
    HomologyGroup computed;
    bool match = false;
};

struct ArnoldReport {
    int d = 0;
    int k = 0;
    std::vector<ArnoldDegreeVerdict> verdicts;
    bool pass = true;
};

// Complement cohomology of Θ_{max≥k} against the additive census of the ring:
// Z exactly in degrees j = (k−2)m for 1 ≤ m ≤ ⌊d/k⌋, zero elsewhere (j ≥ 1).
inline ArnoldReport arnold_crosscheck(int d, int k,
                                      ParityPolicy policy = ParityPolicy::matched,
                                      const SnfOptions& options = {}) {
    if (k < 3) throw ValidationError("arnold_crosscheck: k must be at least 3");
    if (k > d) throw ValidationError("arnold_crosscheck: need k <= d");
    ArnoldReport report;
    report.d = d;
    report.k = k;
    ClosedPoset theta = build_poset(PosetSpec::max_entry_at_least(k), d, policy);
    HomologyTable table = complement_cohomology(theta, SignConvention::insert_plus, options);
    std::set<int> ring_degrees;
    for (int m = 1; m <= d / k; ++m) ring_degrees.insert((k - 2) * m);
    for (int j = 1; j <= d; ++j) {
        ArnoldDegreeVerdict v;
        v.j = j;
        v.expected_rank = ring_degrees.count(j) ? 1 : 0;
        v.computed = table.at(j);
        v.match = v.computed.rank == v.expected_rank && v.computed.torsion.empty();
        if (!v.match) report.pass = false;
        // keep the report to the interesting degrees
        if (v.expected_rank != 0 || !v.computed.is_zero()) report.verdicts.push_back(v);
    }
    return report;
}

}  // namespace omega
