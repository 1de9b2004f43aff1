#include "lpmln/semantics.hpp"

#include <algorithm>
#include <cmath>

#include "lpmln/errors.hpp"

namespace lpmln {

WeightedProgram satisfied_part(const WeightedProgram& p, Interpretation x) {
    std::vector<std::pair<Weight, FormulaRef>> kept;
    std::vector<int> indices;
    for (const auto& r : p.rules()) {
        if (satisfies(p.signature(), x, r.formula)) {
            kept.emplace_back(r.weight, r.formula);
            indices.push_back(r.index);
        }
    }
    WeightedProgram sub(std::move(kept));
    sub = sub.with_signature(p.signature());
    // restore original rule indices
    return sub.with_indices(indices);
}

WeightExpr total_weight(const WeightedProgram& p) {
    Rational soft(0);
    long hard = 0;
    for (const auto& r : p.rules()) {
        if (r.weight.is_alpha())
            ++hard;
        else
            soft += r.weight.value();
    }
    return WeightExpr::exp(soft, hard);
}

Rational unsat_soft_sum(const WeightedProgram& p, Interpretation x) {
    Rational sum(0);
    for (const auto& r : p.rules())
        if (!r.weight.is_alpha() && !satisfies(p.signature(), x, r.formula))
            sum += r.weight.value();
    return sum;
}

long unsat_hard_count(const WeightedProgram& p, Interpretation x) {
    long n = 0;
    for (const auto& r : p.rules())
        if (r.weight.is_alpha() && !satisfies(p.signature(), x, r.formula)) ++n;
    return n;
}

bool is_soft_stable_model(const WeightedProgram& p, Interpretation x) {
    return is_stable_model(satisfied_part(p, x).bare(), p.signature(), x);
}

std::vector<Interpretation> soft_stable_models(const WeightedProgram& p) {
    std::vector<Interpretation> out;
    Bits top = Bits(1) << p.signature().size();
    for (Bits m = 0; m < top; ++m)
        if (is_soft_stable_model(p, {m})) out.push_back({m});
    return out;
}

WeightExpr weight(const WeightedProgram& p, Interpretation x) {
    if (!is_soft_stable_model(p, x)) return WeightExpr::zero();
    return total_weight(satisfied_part(p, x));
}

WeightExpr penalty_weight(const WeightedProgram& p, Interpretation x) {
    if (!is_soft_stable_model(p, x)) return WeightExpr::zero();
    return WeightExpr::exp(-unsat_soft_sum(p, x), -unsat_hard_count(p, x));
}

namespace {

SoftDistribution build_distribution(const WeightedProgram& p,
                                    WeightExpr (*weigh)(const WeightedProgram&,
                                                        Interpretation)) {
    std::vector<SoftDistribution::Entry> support;
    for (Interpretation x : soft_stable_models(p)) support.push_back({x, weigh(p, x)});
    if (support.empty()) throw EmptyModelSetError();
    return SoftDistribution(std::move(support));
}

}  // namespace

SoftDistribution distribution(const WeightedProgram& p) {
    return build_distribution(p, &weight);
}

SoftDistribution penalty_distribution(const WeightedProgram& p) {
    return build_distribution(p, &penalty_weight);
}

SoftDistribution::SoftDistribution(std::vector<Entry> support)
    : support_(std::move(support)) {
    max_hard_ = support_.front().weight.hard();
    for (const auto& e : support_) max_hard_ = std::max(max_hard_, e.weight.hard());
}

const SoftDistribution::Entry* SoftDistribution::find(Interpretation x) const {
    for (const auto& e : support_)
        if (e.model == x) return &e;
    return nullptr;
}

bool SoftDistribution::positive(Interpretation x) const {
    const Entry* e = find(x);
    return e && e->weight.hard() == max_hard_;
}

std::vector<SoftDistribution::Entry> SoftDistribution::positive_support() const {
    std::vector<Entry> out;
    for (const auto& e : support_)
        if (e.weight.hard() == max_hard_) out.push_back(e);
    return out;
}

double SoftDistribution::probability(Interpretation x) const {
    const Entry* e = find(x);
    if (!e || e->weight.hard() != max_hard_) return 0.0;
    // normalize by the largest soft exponent in the dominant group
    double qmax = 0;
    bool first = true;
    for (const auto& s : support_) {
        if (s.weight.hard() != max_hard_) continue;
        double q = s.weight.soft().to_double();
        if (first || q > qmax) qmax = q;
        first = false;
    }
    double z = 0;
    for (const auto& s : support_)
        if (s.weight.hard() == max_hard_)
            z += std::exp(s.weight.soft().to_double() - qmax);
    return std::exp(e->weight.soft().to_double() - qmax) / z;
}

std::string SoftDistribution::probability_exact(Interpretation x) const {
    const Entry* e = find(x);
    if (!e || e->weight.hard() != max_hard_) return "0";
    return "exp(" + e->weight.soft().str() + ")/Z";
}

bool same_distribution(const SoftDistribution& a, const SoftDistribution& b) {
    return !distribution_mismatch(a, b).has_value();
}

std::optional<Interpretation> distribution_mismatch(const SoftDistribution& a,
                                                    const SoftDistribution& b) {
    auto pa = a.positive_support();
    auto pb = b.positive_support();
    auto sort_by_model = [](std::vector<SoftDistribution::Entry>& v) {
        std::sort(v.begin(), v.end(),
                  [](const auto& l, const auto& r) { return l.model < r.model; });
    };
    sort_by_model(pa);
    sort_by_model(pb);

    size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        if (pa[i].model < pb[j].model) return pa[i].model;
        if (pb[j].model < pa[i].model) return pb[j].model;
        ++i;
        ++j;
    }
    if (i < pa.size()) return pa[i].model;
    if (j < pb.size()) return pb[j].model;

    // equal positive supports; compare soft-exponent differences against
    // the first member as anchor
    for (size_t k = 1; k < pa.size(); ++k) {
        Rational da = pa[k].weight.soft() - pa[0].weight.soft();
        Rational db = pb[k].weight.soft() - pb[0].weight.soft();
        if (da != db) return pa[k].model;
    }
    return std::nullopt;
}

}  // namespace lpmln
