#pragma once

#include <random>
#include <string>
#include <vector>

#include "lpmln/parser.hpp"
#include "lpmln/semantics.hpp"

namespace lpmln::test {

// --- paper-anchored fixtures ------------------------------------------------

// F = {2: a|b, 1: <- a & b}, G = {1: a <- not b, 1: b <- not a, 1: <- a & b}:
// weakly but not strongly equivalent.
inline WeightedProgram ex1_F() { return parse_program("2 : a | b.\n1 : <- a & b.\n"); }
inline WeightedProgram ex1_G() {
    return parse_program("1 : a <- not b.\n1 : b <- not a.\n1 : <- a & b.\n");
}
inline WeightedProgram ex1_H() { return parse_program("1 : a <- b.\n1 : b <- a.\n"); }

// F = {0: not a, 2: b <- a, 3: a <- not not a}, G = {2: not a | b, 1: a | not a}:
// strongly equivalent with constant e^2. F' swaps the double negation for
// a <- a; G' reweights the first rule of G to 3.
inline WeightedProgram ex3_F() {
    return parse_program("0 : not a.\n2 : b <- a.\n3 : a <- not not a.\n#signature a, b.\n");
}
inline WeightedProgram ex3_G() {
    return parse_program("2 : not a | b.\n1 : a | not a.\n#signature a, b.\n");
}
inline WeightedProgram ex3_Fp() {
    return parse_program("0 : not a.\n2 : b <- a.\n3 : a <- a.\n#signature a, b.\n");
}
inline WeightedProgram ex3_Gp() {
    return parse_program("3 : not a | b.\n1 : a | not a.\n#signature a, b.\n");
}

inline Interpretation interp(const Signature& sig,
                             const std::vector<std::string>& names) {
    Interpretation x{0};
    for (const auto& n : names) x.bits |= Bits(1) << sig.index(n);
    return x;
}

// --- randomized-case generators ----------------------------------------------

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    FormulaRef formula(const std::vector<std::string>& names, int depth) {
        int pick = below(depth == 0 ? 2 : 6);
        switch (pick) {
            case 0:
            case 1:
                if (names.empty() || below(10) == 0) return Formula::bottom();
                return Formula::atom(names[static_cast<size_t>(below(
                    static_cast<int>(names.size())))]);
            case 2:
                return Formula::negate(formula(names, depth - 1));
            case 3:
                return Formula::conj(formula(names, depth - 1), formula(names, depth - 1));
            case 4:
                return Formula::disj(formula(names, depth - 1), formula(names, depth - 1));
            default:
                return Formula::implies(formula(names, depth - 1),
                                        formula(names, depth - 1));
        }
    }

    Weight weight() {
        int w = below(8) - 3;  // -3..4, with 4 standing for alpha
        return w == 4 ? Weight::alpha() : Weight::soft(Rational(w));
    }

    std::vector<std::string> atom_pool() {
        static const std::vector<std::string> all = {"a", "b", "c"};
        return {all.begin(), all.begin() + 1 + below(3)};
    }

    // up to `max_rules` rules over <= 3 atoms, weights in {-3..3} u {alpha}
    WeightedProgram program(int max_rules = 4, int depth = 2) {
        std::vector<std::string> names = atom_pool();
        std::vector<std::pair<Weight, FormulaRef>> rules;
        int n = 1 + below(max_rules);
        for (int i = 0; i < n; ++i) rules.emplace_back(weight(), formula(names, depth));
        return WeightedProgram(std::move(rules), names);
    }
};

}  // namespace lpmln::test
