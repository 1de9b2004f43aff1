#pragma once

#include <optional>

#include "lpmln/program.hpp"
#include "lpmln/semantics.hpp"

namespace lpmln {

// Base signature plus one fresh primed atom per base atom. Internally the
// primed copy of `a` is `a'`; ASCII output (ASP emission) doubles the name
// instead (`aa`), erroring on collision with an existing atom.
enum class PrimedStyle { Tick, Doubled };

class PrimedSignature {
public:
    explicit PrimedSignature(const Signature& base, PrimedStyle style = PrimedStyle::Tick);

    const Signature& base() const { return base_; }
    // base atoms at indices [0, n), primed copies at [n, 2n)
    const Signature& extended() const { return extended_; }
    int n() const { return base_.size(); }

    const std::string& primed_name(const std::string& base_name) const {
        return extended_.name(base_.index(base_name) + n());
    }

    // assignment Y' u X over the extended signature
    Interpretation assignment(Interpretation y, Interpretation x) const {
        return {x.bits | (y.bits << n())};
    }

private:
    Signature base_;
    Signature extended_;
};

// The recursive transform: atoms to primed copies, negations left
// untouched, and Delta(F -> G) = (Delta F -> Delta G) & (F -> G).
FormulaRef delta(const FormulaRef& f, const PrimedSignature& ps);

struct DeltaCountermodel {
    Interpretation x;
    Interpretation y;
};

enum class DeltaMode {
    PerX,   // for every X: {p'->p} entails Delta(F_X) <-> Delta(G_X)
    Choice  // single entailment over the choice-transformed programs
};

// nullopt when the classical-entailment condition holds; otherwise the
// failing (X, Y) pair, reported split rather than as a raw primed mask.
std::optional<DeltaCountermodel> delta_condition_countermodel(
    const WeightedProgram& pf, const WeightedProgram& pg, DeltaMode mode);

inline bool delta_condition_check(const WeightedProgram& pf, const WeightedProgram& pg,
                                  DeltaMode mode) {
    return !delta_condition_countermodel(pf, pg, mode).has_value();
}

// X is a soft stable model iff no strict subset Y of X is such that
// Y' u X satisfies Delta of the choice-transformed program.
bool delta_stable_check(const WeightedProgram& p, Interpretation x);

// Propositional instantiation of the second-order characterization:
// X satisfies  not exists u (u < p) & Delta_u({bare p}^ch),
// with the quantifier expanded by subset enumeration.
bool second_order_stable_check(const WeightedProgram& p, Interpretation x);

}  // namespace lpmln
