#pragma once

#include "lpmln/program.hpp"
#include "lpmln/semantics.hpp"

namespace lpmln {

enum class World { Here, There };  // ordered h < t

// Satisfaction at a world, directly from the world-indexed clauses; this
// stays independent of the classical/reduct path so the two can be checked
// against each other.
bool ht_satisfies_at(const Signature& sig, HTInterpretation i, World w,
                     const FormulaRef& f);

inline bool ht_satisfies(const Signature& sig, HTInterpretation i, const FormulaRef& f) {
    return ht_satisfies_at(sig, i, World::Here, f);
}

// <Y, X> is a soft HT model of F iff it HT-satisfies every formula of the
// satisfied part F_X.
bool is_soft_ht_model(HTInterpretation i, const WeightedProgram& p);

std::vector<HTInterpretation> soft_ht_models(const WeightedProgram& p);

bool is_equilibrium(const Signature& sig, Interpretation x, const FormulaRef& f);

// <X, X> with no proper <Y, X> that is a soft HT model of p.
bool is_soft_equilibrium(Interpretation x, const WeightedProgram& p);

std::vector<Interpretation> soft_equilibrium_models(const WeightedProgram& p);

}  // namespace lpmln
