#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpmln/rational.hpp"
#include "lpmln/signature.hpp"

namespace lpmln {

// Symbolic weight e^{q + k*alpha} with exact components, plus a distinct
// absorbing zero. The exponent is never evaluated numerically except for
// display, so weight comparison is exact rational/integer comparison.
class WeightExpr {
public:
    static WeightExpr zero() { return WeightExpr(); }
    static WeightExpr exp(Rational soft, long hard = 0) {
        WeightExpr w;
        w.zero_ = false;
        w.soft_ = soft;
        w.hard_ = hard;
        return w;
    }
    static WeightExpr one() { return exp(Rational(0), 0); }

    bool is_zero() const { return zero_; }
    const Rational& soft() const { return soft_; }
    long hard() const { return hard_; }

    friend WeightExpr operator*(const WeightExpr& a, const WeightExpr& b) {
        if (a.zero_ || b.zero_) return zero();
        return exp(a.soft_ + b.soft_, a.hard_ + b.hard_);
    }
    friend WeightExpr operator/(const WeightExpr& a, const WeightExpr& b) {
        if (b.zero_) throw std::domain_error("division by the zero weight");
        if (a.zero_) return zero();
        return exp(a.soft_ - b.soft_, a.hard_ - b.hard_);
    }
    WeightExpr inverse() const {
        if (zero_) throw std::domain_error("the zero weight has no inverse");
        return exp(-soft_, -hard_);
    }

    friend bool operator==(const WeightExpr& a, const WeightExpr& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.soft_ == b.soft_ && a.hard_ == b.hard_;
    }
    friend bool operator!=(const WeightExpr& a, const WeightExpr& b) { return !(a == b); }

    // e.g. "e^2", "e^(3+2a)", "0"
    std::string str() const {
        if (zero_) return "0";
        std::string exp_part;
        if (hard_ == 0) {
            exp_part = soft_.str();
        } else {
            exp_part = soft_.str() + (hard_ > 0 ? "+" : "") + std::to_string(hard_) + "a";
            return "e^(" + exp_part + ")";
        }
        if (!soft_.is_integer() || soft_.num() < 0) return "e^(" + exp_part + ")";
        return "e^" + exp_part;
    }

private:
    bool zero_ = true;
    Rational soft_;
    long hard_ = 0;
};

// Exact distribution over soft stable models under the alpha -> infinity
// limit: only support members maximizing the hard component get positive
// probability.
class SoftDistribution {
public:
    struct Entry {
        Interpretation model;
        WeightExpr weight;
    };

    explicit SoftDistribution(std::vector<Entry> support);

    const std::vector<Entry>& support() const { return support_; }
    long max_hard() const { return max_hard_; }

    bool positive(Interpretation x) const;
    // decimal value of P(x); exact within the dominant-hard group
    double probability(Interpretation x) const;
    // "exp(q)/Z" for positive members, "0" otherwise
    std::string probability_exact(Interpretation x) const;

    std::vector<Entry> positive_support() const;

private:
    const Entry* find(Interpretation x) const;

    std::vector<Entry> support_;
    long max_hard_ = 0;
};

// Pointwise equality of the two probability distributions: equal positive
// supports and equal soft-exponent differences within them (probability
// ratios are e^{qX-qY}, so equal ratios mean equal distributions).
bool same_distribution(const SoftDistribution& a, const SoftDistribution& b);

// First interpretation at which the distributions differ, if any.
std::optional<Interpretation> distribution_mismatch(const SoftDistribution& a,
                                                    const SoftDistribution& b);

}  // namespace lpmln
