#pragma once

#include <string>

#include "lpmln/formula.hpp"
#include "lpmln/program.hpp"

namespace lpmln {

// Parses a single formula using the connectives `not`, `&`, `|`, `->`,
// `<-`, `bot`, `top` with precedence not > & > | > -> (right-assoc).
// `G <- F` is sugar for `F -> G`; a leading `<- F` for `F -> bot`.
FormulaRef parse_formula(const std::string& text);

// Parses the .lpmln file format: `%` comments, an optional single
// `#signature a, b, c.` header, and rule lines `<weight> : <formula>.`
// where the weight is `alpha` or a rational literal (-3, 2.5, 7/2).
WeightedProgram parse_program(const std::string& text);

}  // namespace lpmln
