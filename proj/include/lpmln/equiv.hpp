#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "lpmln/delta.hpp"
#include "lpmln/ht.hpp"
#include "lpmln/semantics.hpp"

namespace lpmln {

enum class EquivKind { Weak, Structural, Strong };

// Conditions (b), (c), (d), (g), (h) of the soft-stable-model theorem;
// all five must agree on every input pair.
enum class StructuralMethod { Reduct, ChoiceReduct, SoftHT, DeltaPerX, DeltaChoice };

struct WeightMismatch {
    Interpretation x;
    WeightExpr tw_f;
    WeightExpr tw_g;
};

struct ReductInequivalence {
    Interpretation x;
    std::optional<Interpretation> countermodel;  // a Y separating the reducts
};

struct DistributionMismatch {
    Interpretation x;
};

using Witness = std::variant<WeightMismatch, ReductInequivalence, DistributionMismatch>;

struct Verdict {
    EquivKind kind;
    bool equivalent = false;
    // TW-form constant c of the strong-equivalence characterization
    std::optional<WeightExpr> c_tw;
    // penalty-form pair (c1, c2)
    std::optional<Rational> c1;
    std::optional<long> c2;
    std::optional<Witness> witness;
    Signature sig;  // union signature the check ran over
};

// Exact pointwise comparison of the two probability distributions over the
// union signature. Throws EmptyModelSetError if either side has no soft
// stable models.
Verdict check_weak(const WeightedProgram& pf, const WeightedProgram& pg);

// Penalty-form candidate (c1, c2) read off at X = {} per the solver-side
// procedure: c1 is the difference of unsatisfied soft-weight sums, c2 the
// difference of unsatisfied hard-rule counts.
std::pair<Rational, long> find_w_expression(const WeightedProgram& pf,
                                            const WeightedProgram& pg);

Verdict check_structural(const WeightedProgram& pf, const WeightedProgram& pg,
                         StructuralMethod method);

// Theorem-2 decision procedure: the candidate w-expression must satisfy
// both the TW-form and penalty-form weight conditions for every X, and the
// programs must be structurally equivalent.
Verdict check_strong(const WeightedProgram& pf, const WeightedProgram& pg);

struct FalsifierResult {
    WeightedProgram context;
    Interpretation x;
};

// First X at which the distributions of pf u h and pg u h differ, if any.
std::optional<Interpretation> context_mismatch(const WeightedProgram& pf,
                                               const WeightedProgram& pg,
                                               const WeightedProgram& h);

// Samples random small context programs looking for a distribution
// mismatch. A sanity oracle against check_strong, not a decision procedure:
// a hit on a pair check_strong accepts would expose a bug.
std::optional<FalsifierResult> randomized_context_falsifier(const WeightedProgram& pf,
                                                            const WeightedProgram& pg,
                                                            int trials,
                                                            std::uint64_t seed);

}  // namespace lpmln
