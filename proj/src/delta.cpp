#include "lpmln/delta.hpp"

namespace lpmln {

PrimedSignature::PrimedSignature(const Signature& base, PrimedStyle style)
    : base_(base) {
    extended_ = base;
    for (const auto& n : base.names()) {
        if (style == PrimedStyle::Tick) {
            extended_.add(n + "'");
        } else {
            std::string doubled = n + n;
            if (base.contains(doubled)) throw PrimedNameCollisionError(doubled);
            extended_.add(doubled);
        }
    }
}

FormulaRef delta(const FormulaRef& f, const PrimedSignature& ps) {
    switch (f->conn()) {
        case Conn::Atom:
            return Formula::atom(ps.primed_name(f->atom_name()));
        case Conn::Bottom:
            return f;
        case Conn::And:
            return Formula::conj(delta(f->lhs(), ps), delta(f->rhs(), ps));
        case Conn::Or:
            return Formula::disj(delta(f->lhs(), ps), delta(f->rhs(), ps));
        case Conn::Implies:
            if (f->rhs()->conn() == Conn::Bottom) return f;  // Delta(not F) = not F
            return Formula::conj(
                Formula::implies(delta(f->lhs(), ps), delta(f->rhs(), ps)), f);
    }
    return f;
}

namespace {

FormulaRef delta_of_set(const std::vector<FormulaRef>& gamma, const PrimedSignature& ps) {
    std::vector<FormulaRef> out;
    out.reserve(gamma.size());
    for (const auto& f : gamma) out.push_back(delta(f, ps));
    return conjoin(out);
}

}  // namespace

std::optional<DeltaCountermodel> delta_condition_countermodel(
    const WeightedProgram& pf, const WeightedProgram& pg, DeltaMode mode) {
    Signature sig = Signature::unite(pf.signature(), pg.signature());
    WeightedProgram f = pf.with_signature(sig);
    WeightedProgram g = pg.with_signature(sig);
    PrimedSignature ps(sig);

    Bits top = Bits(1) << sig.size();

    FormulaRef df, dg;
    if (mode == DeltaMode::Choice) {
        df = delta_of_set(choice_all(f.bare()), ps);
        dg = delta_of_set(choice_all(g.bare()), ps);
    }

    for (Bits x = 0; x < top; ++x) {
        if (mode == DeltaMode::PerX) {
            df = delta_of_set(satisfied_part(f, {x}).bare(), ps);
            dg = delta_of_set(satisfied_part(g, {x}).bare(), ps);
        }
        for (Bits y = x;; y = (y - 1) & x) {
            Interpretation a = ps.assignment({y}, {x});
            if (satisfies(ps.extended(), a, df) != satisfies(ps.extended(), a, dg))
                return DeltaCountermodel{{x}, {y}};
            if (y == 0) break;
        }
    }
    return std::nullopt;
}

bool delta_stable_check(const WeightedProgram& p, Interpretation x) {
    PrimedSignature ps(p.signature());
    FormulaRef dch = delta_of_set(choice_all(p.bare()), ps);
    if (x.bits == 0) return true;  // no strict subsets
    for (Bits y = (x.bits - 1) & x.bits;; y = (y - 1) & x.bits) {
        if (satisfies(ps.extended(), ps.assignment({y}, x), dch)) return false;
        if (y == 0) break;
    }
    return true;
}

bool second_order_stable_check(const WeightedProgram& p, Interpretation x) {
    PrimedSignature ps(p.signature());
    FormulaRef dch = delta_of_set(choice_all(p.bare()), ps);
    Bits top = Bits(1) << p.signature().size();
    // u < p under the p' -> p reading: u <= x componentwise and u != x
    for (Bits u = 0; u < top; ++u) {
        bool u_leq_x = (u & ~x.bits) == 0;
        bool x_leq_u = (x.bits & ~u) == 0;
        if (!(u_leq_x && !x_leq_u)) continue;
        if (satisfies(ps.extended(), ps.assignment({u}, x), dch)) return false;
    }
    return true;
}

}  // namespace lpmln
