#pragma once

#include <utility>
#include <vector>

#include "lpmln/formula.hpp"
#include "lpmln/rational.hpp"
#include "lpmln/signature.hpp"

namespace lpmln {

// Rule weight: a rational (soft rule) or the distinguished infinite
// weight alpha (hard rule).
class Weight {
public:
    static Weight alpha() { return Weight(true, Rational()); }
    static Weight soft(Rational q) { return Weight(false, q); }

    bool is_alpha() const { return alpha_; }
    const Rational& value() const { return value_; }

    std::string str() const { return alpha_ ? "alpha" : value_.str(); }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.alpha_ == b.alpha_ && a.value_ == b.value_;
    }

private:
    Weight(bool a, Rational v) : alpha_(a), value_(v) {}

    bool alpha_;
    Rational value_;
};

struct WeightedRule {
    int index;  // 1-based, in file order
    Weight weight;
    FormulaRef formula;
};

class WeightedProgram {
public:
    WeightedProgram() = default;

    WeightedProgram(std::vector<std::pair<Weight, FormulaRef>> rules,
                    std::vector<std::string> declared_atoms = {}) {
        for (auto& n : declared_atoms) sig_.add(std::move(n));
        for (auto& [w, f] : rules) {
            for (const auto& a : atoms(f)) sig_.add(a);
            rules_.push_back({static_cast<int>(rules_.size()) + 1, w, std::move(f)});
        }
    }

    const std::vector<WeightedRule>& rules() const { return rules_; }
    const Signature& signature() const { return sig_; }
    int size() const { return static_cast<int>(rules_.size()); }

    std::vector<FormulaRef> bare() const {
        std::vector<FormulaRef> out;
        out.reserve(rules_.size());
        for (const auto& r : rules_) out.push_back(r.formula);
        return out;
    }

    // Used by satisfied_part to keep the originating rule indices.
    WeightedProgram with_indices(const std::vector<int>& indices) const {
        WeightedProgram p = *this;
        for (size_t i = 0; i < p.rules_.size() && i < indices.size(); ++i)
            p.rules_[i].index = indices[i];
        return p;
    }

    // Same rules over a (larger) signature.
    WeightedProgram with_signature(Signature sig) const {
        WeightedProgram p = *this;
        p.sig_ = Signature::unite(std::move(sig), sig_);
        return p;
    }

    static WeightedProgram unite(const WeightedProgram& a, const WeightedProgram& b) {
        std::vector<std::pair<Weight, FormulaRef>> rules;
        for (const auto& r : a.rules()) rules.emplace_back(r.weight, r.formula);
        for (const auto& r : b.rules()) rules.emplace_back(r.weight, r.formula);
        WeightedProgram u(std::move(rules));
        u.sig_ = Signature::unite(Signature::unite(a.sig_, b.sig_), u.sig_);
        return u;
    }

private:
    std::vector<WeightedRule> rules_;
    Signature sig_;
};

}  // namespace lpmln
