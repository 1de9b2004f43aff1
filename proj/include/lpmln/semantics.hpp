#pragma once

#include "lpmln/classical.hpp"
#include "lpmln/program.hpp"
#include "lpmln/weight_expr.hpp"

namespace lpmln {

// The satisfied part F_X: rules whose formula X satisfies classically,
// with original indices and weights.
WeightedProgram satisfied_part(const WeightedProgram& p, Interpretation x);

// TW(F) = e^{sum of soft weights + (number of hard rules) * alpha}.
WeightExpr total_weight(const WeightedProgram& p);

// Sum of soft weights of rules X does not satisfy (Theorem 2' condition 1a
// left/right sides), and the count of unsatisfied hard rules (1b).
Rational unsat_soft_sum(const WeightedProgram& p, Interpretation x);
long unsat_hard_count(const WeightedProgram& p, Interpretation x);

bool is_soft_stable_model(const WeightedProgram& p, Interpretation x);
std::vector<Interpretation> soft_stable_models(const WeightedProgram& p);

// W_F(X): TW of the satisfied part when X is a soft stable model, else 0.
WeightExpr weight(const WeightedProgram& p, Interpretation x);

// Penalty-based weight: reciprocal TW of the unsatisfied part when X is a
// soft stable model, else 0.
WeightExpr penalty_weight(const WeightedProgram& p, Interpretation x);

// Throws EmptyModelSetError when the program has no soft stable models.
SoftDistribution distribution(const WeightedProgram& p);
SoftDistribution penalty_distribution(const WeightedProgram& p);

}  // namespace lpmln
