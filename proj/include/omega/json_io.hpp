#pragma once

#include <string>

#include <json.hpp>

#include "omega/characteristic.hpp"
#include "omega/version.hpp"

namespace omega {

using json = nlohmann::ordered_json;

// Coefficients and torsion values are arbitrary-precision; they are emitted as
// JSON numbers while they fit and as decimal strings beyond that.
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline json to_json(const Pattern& p) { return p.to_string(); }

inline json to_json(const Chain& c) {
    json out = json::array();
    for (const auto& [p, coeff] : c.terms()) out.push_back({p.to_string(), int_to_json(coeff)});
    return out;
}

inline const char* policy_name(ParityPolicy policy) {
    return policy == ParityPolicy::matched ? "matched" : "all";
}

inline ParityPolicy policy_from_name(const std::string& name) {
    if (name == "matched") return ParityPolicy::matched;
    if (name == "all") return ParityPolicy::all;
    throw ValidationError("unknown parity policy '" + name + "'");
}

inline json to_json(const PosetSpec& spec) {
    json out;
    if (const auto* g = std::get_if<spec::Generators>(&spec.value)) {
        json list = json::array();
        for (const auto& p : g->patterns) list.push_back(p.to_string());
        out["generators"] = list;
    } else if (const auto* rn = std::get_if<spec::ReducedNormAtLeast>(&spec.value)) {
        out["family"] = {{"type", "reduced_norm_at_least"}, {"k", rn->k}, {"q", rn->q}};
    } else if (const auto* me = std::get_if<spec::MaxEntryAtLeast>(&spec.value)) {
        out["family"] = {{"type", "max_entry_at_least"}, {"k", me->k}};
    } else if (std::holds_alternative<spec::FreeGroupComplement>(spec.value)) {
        out["family"] = {{"type", "entries_le2_at_most_one_2_complement"}};
    } else if (const auto* sb = std::get_if<spec::StrictlyBelow>(&spec.value)) {
        out["family"] = {{"type", "strictly_below"}, {"omega", sb->omega.to_string()}};
    } else if (const auto* ab = std::get_if<spec::AtOrBelow>(&spec.value)) {
        out["family"] = {{"type", "at_or_below"}, {"omega", ab->omega.to_string()}};
    } else {
        out["family"] = {{"type", "full"}};
    }
    return out;
}

inline PosetSpec poset_spec_from_json(const json& j) {
    if (j.contains("generators")) {
        std::vector<Pattern> gens;
        for (const auto& s : j.at("generators")) gens.push_back(Pattern::parse(s.get<std::string>()));
        return PosetSpec::generators(std::move(gens));
    }
    if (!j.contains("family")) throw ValidationError("poset spec needs 'generators' or 'family'");
    const json& f = j.at("family");
    std::string type = f.at("type").get<std::string>();
    if (type == "reduced_norm_at_least")
        return PosetSpec::reduced_norm_at_least(f.at("k").get<int>(), f.value("q", 0));
    if (type == "max_entry_at_least") return PosetSpec::max_entry_at_least(f.at("k").get<int>());
    if (type == "entries_le2_at_most_one_2_complement") return PosetSpec::free_group_complement();
    if (type == "strictly_below")
        return PosetSpec::strictly_below(Pattern::parse(f.at("omega").get<std::string>()));
    if (type == "at_or_below")
        return PosetSpec::at_or_below(Pattern::parse(f.at("omega").get<std::string>()));
    if (type == "full") return PosetSpec::full();
    throw ValidationError("unknown poset family type '" + type + "'");
}

// Canonical form used in cache keys: sorted keys, no whitespace.
inline std::string canonical_spec_string(const PosetSpec& spec) {
    return nlohmann::json(nlohmann::json::parse(to_json(spec).dump())).dump();
}

inline json to_json(const ClosedPoset& poset) {
    json members = json::array();
    for (const auto& p : poset.members()) members.push_back(p.to_string());
    json out = to_json(poset.provenance());
    out["d"] = poset.d();
    out["parity_policy"] = policy_name(poset.policy());
    out["members"] = members;
    return out;
}

inline json to_json(const SparseMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries) entries.push_back({e.row, e.col, int_to_json(e.value)});
    return entries;
}

inline json to_json(const GradedComplex& c) {
    json degrees = json::object();
    for (const auto& [n, pats] : c.basis) {
        json list = json::array();
        for (const auto& p : pats) list.push_back(p.to_string());
        degrees[std::to_string(n)] = list;
    }
    json boundaries = json::object();
    for (const auto& [n, m] : c.boundary) boundaries[std::to_string(n)] = to_json(m);
    return json{{"schema", kSchema},
                {"d", c.d},
                {"parity_policy", policy_name(c.policy)},
                {"kind", to_string(c.kind)},
                {"direction", c.direction == Direction::down ? "down" : "up"},
                {"degrees", degrees},
                {"boundaries", boundaries}};
}

inline json to_json(const HomologyGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(int_to_json(t));
    return json{{"rank", g.rank}, {"torsion", torsion}};
}

inline json to_json(const HomologyTable& t, const char* degree_key = "degree") {
    json groups = json::array();
    for (const auto& [n, g] : t.groups) {
        json entry = to_json(g);
        entry[degree_key] = n;
        groups.push_back(entry);
    }
    return json{{"groups", groups}, {"fingerprint", t.fingerprint}};
}

inline json to_json(const EulerReport& r) {
    json census = json::object();
    for (const auto& [deg, count] : r.cells_by_degree) census[std::to_string(deg)] = count;
    return json{{"chi", r.chi},
                {"abs_euler", r.abs_euler},
                {"chi_compactified", r.chi_compactified},
                {"cells_by_degree", census}};
}

inline json to_json(const StabilityQuantities& q) {
    json maximal = json::array();
    for (const auto& p : q.maximal_elements_used) maximal.push_back(p.to_string());
    return json{{"eta", q.eta},
                {"psi", q.psi.to_string()},
                {"xi", q.xi.to_string()},
                {"maximal_elements", maximal}};
}

inline json to_json(const DegreeComparison& c) {
    return json{{"j", c.j},
                {"at_d", to_json(c.lhs)},
                {"at_d_plus_2", to_json(c.rhs)},
                {"in_certified_range", c.in_certified_range},
                {"agree", c.agree}};
}

inline json to_json(const StabilizationStep& s) {
    json complement = json::array();
    for (const auto& c : s.complement) complement.push_back(to_json(c));
    json compactified = json::array();
    for (const auto& c : s.compactified) compactified.push_back(to_json(c));
    json out{{"d_from", s.d_from},
             {"d_to", s.d_to},
             {"eta", s.eta},
             {"psi", s.psi.to_string()},
             {"xi", s.xi.to_string()},
             {"complement_homology", complement},
             {"compactified_homology", compactified},
             {"pass", s.pass}};
    if (!s.finding.empty()) out["finding"] = s.finding;
    return out;
}

inline json to_json(const StabilizationReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    return json{{"d", r.d}, {"d_prime", r.d_prime}, {"steps", steps}, {"pass", r.pass}};
}

inline json to_json(const BouquetReport& r) {
    return json{{"d", r.d},
                {"k", r.k},
                {"q", r.q},
                {"census_chi", r.census_chi},
                {"abs_euler", r.abs_euler},
                {"expected_degree", r.expected_degree},
                {"torsion_free", r.torsion_free},
                {"concentrated", r.concentrated},
                {"rank_at_expected_degree", r.rank_at_expected},
                {"rank_matches_euler", r.rank_matches_euler},
                {"pass", r.pass},
                {"homology", to_json(r.homology)}};
}

inline json to_json(const CodimensionReport& r) {
    return json{{"min_reduced_norm", r.min_reduced_norm},
                {"max_reduced_norm_over_maximal", r.max_reduced_norm_over_maximal},
                {"max_reduced_norm", r.max_reduced_norm}};
}

inline json to_json(const VassilievElement& e) {
    json coeffs = json::object();
    for (const auto& [m, c] : e.coeffs) coeffs[std::to_string(m)] = int_to_json(c);
    return json{{"d", e.d}, {"k", e.k}, {"coeffs", coeffs}};
}

inline json to_json(const ArnoldReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(json{{"j", v.j},
                                {"expected_rank", v.expected_rank},
                                {"computed", to_json(v.computed)},
                                {"match", v.match}});
    return json{{"d", r.d}, {"k", r.k}, {"verdicts", verdicts}, {"pass", r.pass}};
}

inline json to_json(const DifferentialIdentityReport& r) {
    json out{{"d", r.d},
             {"merge_square_zero", r.merge_square_zero},
             {"insert_square_zero", r.insert_square_zero},
             {"anticommute", r.anticommute},
             {"full_square_zero", r.full_square_zero},
             {"pass", r.all_hold()}};
    if (r.witness) out["witness"] = r.witness->to_string();
    return out;
}

}  // namespace omega
