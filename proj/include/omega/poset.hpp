#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "omega/pattern.hpp"

namespace omega {

// Descriptors for closed subposets of Ω_{⟨d]}.  Exactly one alternative.
namespace spec {

struct Generators {
    std::vector<Pattern> patterns;
};
struct ReducedNormAtLeast {  // { ω : |ω|' ≥ k and |ω| ≥ q }
    int k = 1;
    int q = 0;
};
struct MaxEntryAtLeast {  // { ω : max entry ≥ k }
    int k = 3;
};
// Complement of { ω : entries in {1,2}, at most one entry 2 }.
struct FreeGroupComplement {};
struct StrictlyBelow {  // ω_≻ : everything strictly below ω
    Pattern omega;
};
struct AtOrBelow {  // ω_⪰ : ω together with everything below it
    Pattern omega;
};
struct Full {};

}  // namespace spec

struct PosetSpec {
    std::variant<spec::Generators, spec::ReducedNormAtLeast, spec::MaxEntryAtLeast,
                 spec::FreeGroupComplement, spec::StrictlyBelow, spec::AtOrBelow, spec::Full>
        value;

    static PosetSpec generators(std::vector<Pattern> gens) {
        return {spec::Generators{std::move(gens)}};
    }
    static PosetSpec reduced_norm_at_least(int k, int q = 0) {
        return {spec::ReducedNormAtLeast{k, q}};
    }
    static PosetSpec max_entry_at_least(int k) { return {spec::MaxEntryAtLeast{k}}; }
    static PosetSpec free_group_complement() { return {spec::FreeGroupComplement{}}; }
    static PosetSpec strictly_below(Pattern p) { return {spec::StrictlyBelow{std::move(p)}}; }
    static PosetSpec at_or_below(Pattern p) { return {spec::AtOrBelow{std::move(p)}}; }
    static PosetSpec full() { return {spec::Full{}}; }
};

// All patterns of norm ≤ d admitted by the parity policy, canonically sorted.
// Levels are always even: only even-degree polynomial spaces carry the theory.
inline std::vector<Pattern> enumerate_patterns(int d, ParityPolicy policy = ParityPolicy::matched) {
    if (d < 0 || d % 2 != 0) throw ValidationError("enumerate_patterns: d must be even and nonnegative");
    std::set<Pattern> out;
    for (int n = 0; n <= d; ++n) {
        if (policy == ParityPolicy::matched && (n - d) % 2 != 0) continue;
        if (n == 0) {
            out.insert(Pattern{});
            continue;
        }
        // compositions of n, via the 2^{n-1} cut sets
        std::vector<int> parts;
        for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
            parts.clear();
            int run = 1;
            for (int bit = 0; bit < n - 1; ++bit) {
                if (mask & (1ul << bit)) {
                    parts.push_back(run);
                    run = 1;
                } else {
                    run++;
                }
            }
            parts.push_back(run);
            out.insert(Pattern(parts));
        }
    }
    return {out.begin(), out.end()};
}

// A finite, explicitly enumerated closed subposet of Ω_{⟨d]}, with provenance.
class ClosedPoset {
public:
    ClosedPoset(int d, ParityPolicy policy, std::vector<Pattern> members, PosetSpec provenance)
        : d_(d), policy_(policy), members_(std::move(members)), spec_(std::move(provenance)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int d() const { return d_; }
    ParityPolicy policy() const { return policy_; }
    const std::vector<Pattern>& members() const { return members_; }
    const PosetSpec& provenance() const { return spec_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(const Pattern& p) const {
        return std::binary_search(members_.begin(), members_.end(), p);
    }

    // Homological degree of a member: d − |ω|'.
    int degree_of(const Pattern& p) const { return d_ - p.reduced_norm(); }

private:
    int d_;
    ParityPolicy policy_;
    std::vector<Pattern> members_;  // sorted by (reduced norm, norm, lex)
    PosetSpec spec_;
};

namespace detail {

inline std::set<Pattern> close_under_successors(const std::set<Pattern>& seeds, int d) {
    std::set<Pattern> closed(seeds);
    std::deque<Pattern> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        Pattern cur = queue.front();
        queue.pop_front();
        for (const Pattern& next : elementary_successors(cur, d))
            if (closed.insert(next).second) queue.push_back(next);
    }
    return closed;
}

inline bool in_free_group_complement_strata(const Pattern& p) {
    int twos = 0;
    for (int e : p.entries()) {
        if (e > 2) return false;
        if (e == 2) twos++;
    }
    return twos <= 1;
}

}  // namespace detail

inline ClosedPoset build_poset(const PosetSpec& spec, int d,
                               ParityPolicy policy = ParityPolicy::matched) {
    if (d < 2 || d % 2 != 0) throw ValidationError("build_poset: d must be even and at least 2");
    auto admit = [&](const Pattern& p) { return parity_admits(p, d, policy); };
    auto require_valid_seed = [&](const Pattern& p, const char* role) {
        if (p.norm() > d)
            throw ValidationError(std::string("build_poset: ") + role + " " + p.to_string() +
                                  " has norm " + std::to_string(p.norm()) + " > d = " +
                                  std::to_string(d));
        if (!admit(p))
            throw ValidationError(std::string("build_poset: ") + role + " " + p.to_string() +
                                  " has the wrong norm parity for d = " + std::to_string(d));
    };

    std::vector<Pattern> members;
    if (const auto* g = std::get_if<spec::Generators>(&spec.value)) {
        std::set<Pattern> seeds;
        for (const Pattern& p : g->patterns) {
            require_valid_seed(p, "generator");
            seeds.insert(p);
        }
        auto closed = detail::close_under_successors(seeds, d);
        members.assign(closed.begin(), closed.end());
    } else if (const auto* sb = std::get_if<spec::StrictlyBelow>(&spec.value)) {
        require_valid_seed(sb->omega, "pattern");
        auto closed = detail::close_under_successors(elementary_successors(sb->omega, d), d);
        members.assign(closed.begin(), closed.end());
    } else if (const auto* ab = std::get_if<spec::AtOrBelow>(&spec.value)) {
        require_valid_seed(ab->omega, "pattern");
        auto closed = detail::close_under_successors({ab->omega}, d);
        members.assign(closed.begin(), closed.end());
    } else {
        for (const Pattern& p : enumerate_patterns(d, policy)) {
            bool keep = false;
            if (const auto* rn = std::get_if<spec::ReducedNormAtLeast>(&spec.value)) {
                if (rn->k < 1) throw ValidationError("build_poset: reduced_norm_at_least needs k >= 1");
                keep = p.reduced_norm() >= rn->k && p.norm() >= rn->q;
            } else if (const auto* me = std::get_if<spec::MaxEntryAtLeast>(&spec.value)) {
                if (me->k < 1) throw ValidationError("build_poset: max_entry_at_least needs k >= 1");
                keep = p.max_entry() >= me->k;
            } else if (std::holds_alternative<spec::FreeGroupComplement>(spec.value)) {
                keep = !detail::in_free_group_complement_strata(p);
            } else {
                keep = true;  // Full
            }
            if (keep) members.push_back(p);
        }
    }
    return ClosedPoset(d, policy, std::move(members), spec);
}

struct ClosureCounterexample {
    Pattern member;
    Pattern missing_successor;
};

// Closure check over an explicit member set.  Successors of each member are
// scanned in operation order (M_1..M_{s−1}, I_0..I_s) so the reported witness
// is the first missing image.
inline std::optional<ClosureCounterexample> closure_counterexample(
    const std::vector<Pattern>& members, int d) {
    std::set<Pattern> set(members.begin(), members.end());
    for (const Pattern& p : members) {
        const int s = p.support_size();
        auto check = [&](const Pattern& image) -> bool { return set.count(image) != 0; };
        for (int k = 1; k <= s - 1; ++k) {
            Pattern image = p.merge_at(k);
            if (!check(image)) return ClosureCounterexample{p, image};
        }
        if (p.norm() + 2 <= d) {
            for (int k = 0; k <= s; ++k) {
                Pattern image = p.insert_at(k);
                if (!check(image)) return ClosureCounterexample{p, image};
            }
        }
    }
    return std::nullopt;
}

inline bool is_closed(const std::vector<Pattern>& members, int d) {
    return !closure_counterexample(members, d).has_value();
}

// Members with no predecessor inside the poset.  Every member descends from a
// maximal one (the reduced norm strictly drops along predecessor chains), so
// closing the maximal elements regenerates the poset.
inline std::vector<Pattern> maximal_elements(const ClosedPoset& poset) {
    std::vector<Pattern> out;
    for (const Pattern& p : poset.members()) {
        bool has_pred = false;
        for (const Pattern& pred : elementary_predecessors(p)) {
            if (poset.contains(pred)) {
                has_pred = true;
                break;
            }
        }
        if (!has_pred) out.push_back(p);
    }
    return out;
}

// Closure of the members inside Ω_{⟨d′]}: the smallest closed poset at the new
// level containing Θ.  Identity at d′ = d.
inline ClosedPoset lift_poset(const ClosedPoset& poset, int d_prime) {
    if (d_prime < poset.d())
        throw ValidationError("lift_poset: d' must be >= d");
    if ((d_prime - poset.d()) % 2 != 0)
        throw ValidationError("lift_poset: d' must have the parity of d");
    std::set<Pattern> seeds(poset.members().begin(), poset.members().end());
    auto closed = detail::close_under_successors(seeds, d_prime);
    return ClosedPoset(d_prime, poset.policy(),
                       std::vector<Pattern>(closed.begin(), closed.end()), poset.provenance());
}

struct ProfiniteVerdict {
    bool profinite = false;
    std::string reason;
};

// Decided symbolically per descriptor, about the un-truncated poset the
// descriptor denotes.  Each elementary operation raises |ω|' by exactly one,
// so any finitely generated closure has finite balls of bounded reduced norm.
inline ProfiniteVerdict is_profinite(const PosetSpec& spec) {
    if (std::holds_alternative<spec::Generators>(spec.value) ||
        std::holds_alternative<spec::StrictlyBelow>(spec.value) ||
        std::holds_alternative<spec::AtOrBelow>(spec.value)) {
        return {true, "finitely generated closure: only finitely many patterns have any fixed reduced norm"};
    }
    if (const auto* rn = std::get_if<spec::ReducedNormAtLeast>(&spec.value)) {
        return {false, "infinite witness family (1,...,1," + std::to_string(rn->k + 1) +
                           ") of constant reduced norm " + std::to_string(rn->k)};
    }
    if (const auto* me = std::get_if<spec::MaxEntryAtLeast>(&spec.value)) {
        return {false, "infinite witness family (1,...,1," + std::to_string(me->k) +
                           ") of constant reduced norm " + std::to_string(me->k - 1)};
    }
    if (std::holds_alternative<spec::FreeGroupComplement>(spec.value)) {
        return {false, "infinite witness family (1,...,1,3) of constant reduced norm 2"};
    }
    if (std::holds_alternative<spec::Full>(spec.value)) {
        return {false, "infinite witness family (1,...,1) of reduced norm 0"};
    }
    throw ValidationError("is_profinite: undecidable for this descriptor");
}

// Λ-condition: the empty pattern is not a member.
inline bool check_lambda(const ClosedPoset& poset) { return !poset.contains(Pattern{}); }

// Compositions count: |Ω_{⟨d]}| restricted to parity d, for even d.
inline long long parity_pattern_count(int d) {
    long long total = 1;  // the empty pattern
    for (int m = 2; m <= d; m += 2) total += 1ll << (m - 1);
    return total;
}

}  // namespace omega
