#pragma once

#include <optional>
#include <vector>

#include "lpmln/formula.hpp"
#include "lpmln/signature.hpp"

namespace lpmln {

bool satisfies(const Signature& sig, Interpretation x, const FormulaRef& f);

// Ferraris reduct F^X: every maximal subformula not satisfied by X is
// replaced by bot. If X does not satisfy F the result is exactly bot.
FormulaRef reduct(const FormulaRef& f, const Signature& sig, Interpretation x);

// X is stable for Gamma iff X satisfies every member and no proper subset
// of X satisfies all reducts. Minimality is checked by subset enumeration.
bool is_stable_model(const std::vector<FormulaRef>& gamma, const Signature& sig,
                     Interpretation x);

std::vector<Interpretation> stable_models(const std::vector<FormulaRef>& gamma,
                                          const Signature& sig);

// The choice formula {F}^ch = F | not F.
FormulaRef choice(const FormulaRef& f);
std::vector<FormulaRef> choice_all(const std::vector<FormulaRef>& gamma);

// nullopt when f and g agree on every interpretation; otherwise a witness.
// Only atoms(f) | atoms(g) are enumerated; unused atoms cannot affect truth.
std::optional<Interpretation> classical_countermodel(const FormulaRef& f,
                                                     const FormulaRef& g,
                                                     const Signature& sig);

inline bool classically_equivalent(const FormulaRef& f, const FormulaRef& g,
                                   const Signature& sig) {
    return !classical_countermodel(f, g, sig).has_value();
}

// Folds a set of formulas into one conjunction; the empty set yields top.
FormulaRef conjoin(const std::vector<FormulaRef>& gamma);

}  // namespace lpmln
