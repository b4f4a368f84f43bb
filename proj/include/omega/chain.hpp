#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "omega/pattern.hpp"

namespace omega {

using Int = boost::multiprecision::cpp_int;

// Formal integer combination of patterns.  Zero coefficients are never stored.
class Chain {
public:
    Chain() = default;

    void add(const Pattern& p, const Int& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const Pattern& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Int(0) : it->second;
    }

    const std::map<Pattern, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Chain& operator+=(const Chain& other) {
        for (const auto& [p, c] : other.terms_) add(p, c);
        return *this;
    }
    Chain& operator-=(const Chain& other) {
        for (const auto& [p, c] : other.terms_) add(p, -c);
        return *this;
    }
    Chain& operator*=(const Int& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= scalar;
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) s += ' ';
            s += (c > 0 ? "+" : "-");
            Int a = abs(c);
            if (a != 1) s += a.str() + "*";
            s += p.to_string();
        }
        return s;
    }

private:
    std::map<Pattern, Int> terms_;
};

enum class BoundaryVariant { merge_only, insert_only, full };

// ∂ = ∂_M + ∂_I is the default.  insert_minus gives the conjugate convention
// ∂_M − ∂_I; the two are intertwined by ω ↦ (−1)^{|ω|/2} ω.
enum class SignConvention { insert_plus, insert_minus };

// The signed boundary of a single pattern at level d:
//   ∂_M(ω) = −Σ_{k=1}^{s−1} (−1)^k M_k(ω)
//   ∂_I(ω) =  Σ_{k=0}^{s}   (−1)^k I_k(ω),  insert terms of norm > d dropped.
// Like terms are collected: distinct k can produce equal patterns whose signs
// cancel or reinforce.
inline Chain boundary_chain(const Pattern& p, int d, BoundaryVariant variant,
                            SignConvention convention = SignConvention::insert_plus,
                            ParityPolicy policy = ParityPolicy::matched) {
    if (p.norm() > d)
        throw ValidationError("boundary_chain: norm " + std::to_string(p.norm()) +
                              " exceeds d = " + std::to_string(d));
    if (!parity_admits(p, d, policy))
        throw ValidationError("boundary_chain: pattern " + p.to_string() +
                              " has the wrong norm parity for d = " + std::to_string(d));
    Chain out;
    const int s = p.support_size();
    if (variant != BoundaryVariant::insert_only) {
        for (int k = 1; k <= s - 1; ++k) out.add(p.merge_at(k), (k % 2 == 0) ? -1 : 1);
    }
    if (variant != BoundaryVariant::merge_only && p.norm() + 2 <= d) {
        const int flip = (convention == SignConvention::insert_minus) ? -1 : 1;
        for (int k = 0; k <= s; ++k) out.add(p.insert_at(k), (k % 2 == 0) ? flip : -flip);
    }
    return out;
}

// Linear extension of the boundary to chains; used for the ∂² identities.
inline Chain boundary_of_chain(const Chain& chain, int d, BoundaryVariant variant,
                               SignConvention convention = SignConvention::insert_plus,
                               ParityPolicy policy = ParityPolicy::matched) {
    Chain out;
    for (const auto& [p, c] : chain.terms()) {
        Chain b = boundary_chain(p, d, variant, convention, policy);
        b *= c;
        out += b;
    }
    return out;
}

}  // namespace omega
