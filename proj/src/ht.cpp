#include "lpmln/ht.hpp"

namespace lpmln {

bool ht_satisfies_at(const Signature& sig, HTInterpretation i, World w,
                     const FormulaRef& f) {
    switch (f->conn()) {
        case Conn::Atom: {
            int idx = sig.index(f->atom_name());
            return w == World::Here ? i.here.has(idx) : i.there.has(idx);
        }
        case Conn::Bottom:
            return false;
        case Conn::And:
            return ht_satisfies_at(sig, i, w, f->lhs()) &&
                   ht_satisfies_at(sig, i, w, f->rhs());
        case Conn::Or:
            return ht_satisfies_at(sig, i, w, f->lhs()) ||
                   ht_satisfies_at(sig, i, w, f->rhs());
        case Conn::Implies: {
            // must hold at every world w' >= w
            if (w == World::Here &&
                ht_satisfies_at(sig, i, World::Here, f->lhs()) &&
                !ht_satisfies_at(sig, i, World::Here, f->rhs()))
                return false;
            return !ht_satisfies_at(sig, i, World::There, f->lhs()) ||
                   ht_satisfies_at(sig, i, World::There, f->rhs());
        }
    }
    return false;
}

bool is_soft_ht_model(HTInterpretation i, const WeightedProgram& p) {
    for (const auto& r : p.rules()) {
        if (!satisfies(p.signature(), i.there, r.formula)) continue;  // not in F_X
        if (!ht_satisfies(p.signature(), i, r.formula)) return false;
    }
    return true;
}

std::vector<HTInterpretation> soft_ht_models(const WeightedProgram& p) {
    std::vector<HTInterpretation> out;
    Bits top = Bits(1) << p.signature().size();
    for (Bits x = 0; x < top; ++x) {
        for (Bits y = x;; y = (y - 1) & x) {
            HTInterpretation i{{y}, {x}};
            if (is_soft_ht_model(i, p)) out.push_back(i);
            if (y == 0) break;
        }
    }
    return out;
}

bool is_equilibrium(const Signature& sig, Interpretation x, const FormulaRef& f) {
    HTInterpretation total{x, x};
    if (!ht_satisfies(sig, total, f)) return false;
    if (x.bits == 0) return true;
    for (Bits y = (x.bits - 1) & x.bits;; y = (y - 1) & x.bits) {
        if (ht_satisfies(sig, {{y}, x}, f)) return false;
        if (y == 0) break;
    }
    return true;
}

bool is_soft_equilibrium(Interpretation x, const WeightedProgram& p) {
    if (x.bits == 0) return true;  // no proper subsets
    for (Bits y = (x.bits - 1) & x.bits;; y = (y - 1) & x.bits) {
        if (is_soft_ht_model({{y}, x}, p)) return false;
        if (y == 0) break;
    }
    return true;
}

std::vector<Interpretation> soft_equilibrium_models(const WeightedProgram& p) {
    std::vector<Interpretation> out;
    Bits top = Bits(1) << p.signature().size();
    for (Bits x = 0; x < top; ++x)
        if (is_soft_equilibrium({x}, p)) out.push_back({x});
    return out;
}

}  // namespace lpmln
