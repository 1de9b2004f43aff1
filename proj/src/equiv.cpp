#include "lpmln/equiv.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lpmln/errors.hpp"

namespace lpmln {

namespace {

struct Rehomed {
    WeightedProgram f;
    WeightedProgram g;
    Signature sig;
};

Rehomed rehome(const WeightedProgram& pf, const WeightedProgram& pg) {
    Signature sig = Signature::unite(pf.signature(), pg.signature());
    return {pf.with_signature(sig), pg.with_signature(sig), sig};
}

}  // namespace

Verdict check_weak(const WeightedProgram& pf, const WeightedProgram& pg) {
    auto [f, g, sig] = rehome(pf, pg);
    Verdict v;
    v.kind = EquivKind::Weak;
    v.sig = sig;
    SoftDistribution df = distribution(f);
    SoftDistribution dg = distribution(g);
    if (auto x = distribution_mismatch(df, dg)) {
        v.equivalent = false;
        v.witness = DistributionMismatch{*x};
    } else {
        v.equivalent = true;
    }
    return v;
}

std::pair<Rational, long> find_w_expression(const WeightedProgram& pf,
                                            const WeightedProgram& pg) {
    auto [f, g, sig] = rehome(pf, pg);
    Interpretation empty{0};
    Rational c1 = unsat_soft_sum(f, empty) - unsat_soft_sum(g, empty);
    long c2 = unsat_hard_count(f, empty) - unsat_hard_count(g, empty);
    return {c1, c2};
}

namespace {

FormulaRef reduct_of_set(const std::vector<FormulaRef>& gamma, const Signature& sig,
                         Interpretation x) {
    std::vector<FormulaRef> out;
    out.reserve(gamma.size());
    for (const auto& f : gamma) out.push_back(reduct(f, sig, x));
    return conjoin(out);
}

std::optional<ReductInequivalence> structural_countermodel(const WeightedProgram& f,
                                                           const WeightedProgram& g,
                                                           const Signature& sig,
                                                           StructuralMethod method) {
    Bits top = Bits(1) << sig.size();
    switch (method) {
        case StructuralMethod::Reduct:
            for (Bits x = 0; x < top; ++x) {
                FormulaRef rf = reduct_of_set(satisfied_part(f, {x}).bare(), sig, {x});
                FormulaRef rg = reduct_of_set(satisfied_part(g, {x}).bare(), sig, {x});
                if (auto cm = classical_countermodel(rf, rg, sig))
                    return ReductInequivalence{{x}, cm};
            }
            return std::nullopt;
        case StructuralMethod::ChoiceReduct:
            for (Bits x = 0; x < top; ++x) {
                FormulaRef rf = reduct_of_set(choice_all(f.bare()), sig, {x});
                FormulaRef rg = reduct_of_set(choice_all(g.bare()), sig, {x});
                if (auto cm = classical_countermodel(rf, rg, sig))
                    return ReductInequivalence{{x}, cm};
            }
            return std::nullopt;
        case StructuralMethod::SoftHT: {
            for (Bits x = 0; x < top; ++x) {
                for (Bits y = x;; y = (y - 1) & x) {
                    HTInterpretation i{{y}, {x}};
                    if (is_soft_ht_model(i, f) != is_soft_ht_model(i, g))
                        return ReductInequivalence{{x}, Interpretation{y}};
                    if (y == 0) break;
                }
            }
            return std::nullopt;
        }
        case StructuralMethod::DeltaPerX:
        case StructuralMethod::DeltaChoice: {
            DeltaMode mode = method == StructuralMethod::DeltaPerX ? DeltaMode::PerX
                                                                   : DeltaMode::Choice;
            if (auto cm = delta_condition_countermodel(f, g, mode))
                return ReductInequivalence{cm->x, cm->y};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict check_structural(const WeightedProgram& pf, const WeightedProgram& pg,
                         StructuralMethod method) {
    auto [f, g, sig] = rehome(pf, pg);
    Verdict v;
    v.kind = EquivKind::Structural;
    v.sig = sig;
    if (auto w = structural_countermodel(f, g, sig, method)) {
        v.equivalent = false;
        v.witness = *w;
    } else {
        v.equivalent = true;
    }
    return v;
}

Verdict check_strong(const WeightedProgram& pf, const WeightedProgram& pg) {
    auto [f, g, sig] = rehome(pf, pg);
    Verdict v;
    v.kind = EquivKind::Strong;
    v.sig = sig;

    Interpretation empty{0};
    Rational c1 = unsat_soft_sum(f, empty) - unsat_soft_sum(g, empty);
    long c2 = unsat_hard_count(f, empty) - unsat_hard_count(g, empty);
    WeightExpr c_tw = total_weight(satisfied_part(f, empty)) /
                      total_weight(satisfied_part(g, empty));

    Bits top = Bits(1) << sig.size();
    for (Bits m = 0; m < top; ++m) {
        Interpretation x{m};
        WeightExpr twf = total_weight(satisfied_part(f, x));
        WeightExpr twg = total_weight(satisfied_part(g, x));
        bool tw_ok = twf == c_tw * twg;
        bool pnt_ok = unsat_soft_sum(f, x) == c1 + unsat_soft_sum(g, x) &&
                      unsat_hard_count(f, x) == c2 + unsat_hard_count(g, x);
        if (tw_ok != pnt_ok)
            throw std::logic_error("TW-form and penalty-form weight checks disagree");
        if (!tw_ok) {
            v.equivalent = false;
            v.witness = WeightMismatch{x, twf, twg};
            return v;
        }
    }

    if (auto w = structural_countermodel(f, g, sig, StructuralMethod::Reduct)) {
        v.equivalent = false;
        v.witness = *w;
        return v;
    }

    v.equivalent = true;
    v.c_tw = c_tw;
    v.c1 = c1;
    v.c2 = c2;
    return v;
}

std::optional<Interpretation> context_mismatch(const WeightedProgram& pf,
                                               const WeightedProgram& pg,
                                               const WeightedProgram& h) {
    WeightedProgram fh = WeightedProgram::unite(pf, h);
    WeightedProgram gh = WeightedProgram::unite(pg, h);
    Signature sig = Signature::unite(fh.signature(), gh.signature());
    fh = fh.with_signature(sig);
    gh = gh.with_signature(sig);

    std::optional<SoftDistribution> df, dg;
    try {
        df = distribution(fh);
    } catch (const EmptyModelSetError&) {
    }
    try {
        dg = distribution(gh);
    } catch (const EmptyModelSetError&) {
    }
    if (!df && !dg) return std::nullopt;  // both undefined, nothing to compare
    if (df && !dg) return df->positive_support().front().model;
    if (!df && dg) return dg->positive_support().front().model;
    return distribution_mismatch(*df, *dg);
}

namespace {

FormulaRef random_formula(std::mt19937_64& rng, const std::vector<std::string>& names,
                          int depth) {
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 5);
    switch (pick(rng)) {
        case 0:
        case 1: {
            if (names.empty()) return Formula::bottom();
            std::uniform_int_distribution<size_t> ai(0, names.size() - 1);
            // small chance of a bare bot leaf
            if (std::uniform_int_distribution<int>(0, 9)(rng) == 0)
                return Formula::bottom();
            return Formula::atom(names[ai(rng)]);
        }
        case 2:
            return Formula::negate(random_formula(rng, names, depth - 1));
        case 3:
            return Formula::conj(random_formula(rng, names, depth - 1),
                                 random_formula(rng, names, depth - 1));
        case 4:
            return Formula::disj(random_formula(rng, names, depth - 1),
                                 random_formula(rng, names, depth - 1));
        default:
            return Formula::implies(random_formula(rng, names, depth - 1),
                                    random_formula(rng, names, depth - 1));
    }
}

WeightedProgram random_context(std::mt19937_64& rng,
                               const std::vector<std::string>& names) {
    std::uniform_int_distribution<int> nrules(1, 3);
    std::uniform_int_distribution<int> wpick(-3, 4);  // 4 stands for alpha
    std::vector<std::pair<Weight, FormulaRef>> rules;
    int n = nrules(rng);
    for (int i = 0; i < n; ++i) {
        int w = wpick(rng);
        Weight weight = w == 4 ? Weight::alpha() : Weight::soft(Rational(w));
        rules.emplace_back(weight, random_formula(rng, names, 2));
    }
    return WeightedProgram(std::move(rules), names);
}

}  // namespace

std::optional<FalsifierResult> randomized_context_falsifier(const WeightedProgram& pf,
                                                            const WeightedProgram& pg,
                                                            int trials,
                                                            std::uint64_t seed) {
    Signature sig = Signature::unite(pf.signature(), pg.signature());
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        WeightedProgram h = random_context(rng, sig.names());
        if (auto x = context_mismatch(pf, pg, h)) return FalsifierResult{h, *x};
    }
    return std::nullopt;
}

}  // namespace lpmln
