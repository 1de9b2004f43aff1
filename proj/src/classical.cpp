#include "lpmln/classical.hpp"

namespace lpmln {

bool satisfies(const Signature& sig, Interpretation x, const FormulaRef& f) {
    switch (f->conn()) {
        case Conn::Atom: return x.has(sig.index(f->atom_name()));
        case Conn::Bottom: return false;
        case Conn::And:
            return satisfies(sig, x, f->lhs()) && satisfies(sig, x, f->rhs());
        case Conn::Or:
            return satisfies(sig, x, f->lhs()) || satisfies(sig, x, f->rhs());
        case Conn::Implies:
            return !satisfies(sig, x, f->lhs()) || satisfies(sig, x, f->rhs());
    }
    return false;
}

FormulaRef reduct(const FormulaRef& f, const Signature& sig, Interpretation x) {
    if (!satisfies(sig, x, f)) return Formula::bottom();
    switch (f->conn()) {
        case Conn::Atom: return f;
        case Conn::And:
            return Formula::conj(reduct(f->lhs(), sig, x), reduct(f->rhs(), sig, x));
        case Conn::Or:
            return Formula::disj(reduct(f->lhs(), sig, x), reduct(f->rhs(), sig, x));
        case Conn::Implies:
            return Formula::implies(reduct(f->lhs(), sig, x), reduct(f->rhs(), sig, x));
        case Conn::Bottom: break;  // unreachable: bot is never satisfied
    }
    return Formula::bottom();
}

namespace {

bool satisfies_all(const Signature& sig, Interpretation x,
                   const std::vector<FormulaRef>& gamma) {
    for (const auto& f : gamma)
        if (!satisfies(sig, x, f)) return false;
    return true;
}

}  // namespace

bool is_stable_model(const std::vector<FormulaRef>& gamma, const Signature& sig,
                     Interpretation x) {
    if (!satisfies_all(sig, x, gamma)) return false;
    std::vector<FormulaRef> reducts;
    reducts.reserve(gamma.size());
    for (const auto& f : gamma) reducts.push_back(reduct(f, sig, x));
    // enumerate proper submasks of x
    for (Bits y = (x.bits - 1) & x.bits;; y = (y - 1) & x.bits) {
        if (x.bits == 0) break;
        if (satisfies_all(sig, {y}, reducts)) return false;
        if (y == 0) break;
    }
    return true;
}

std::vector<Interpretation> stable_models(const std::vector<FormulaRef>& gamma,
                                          const Signature& sig) {
    std::vector<Interpretation> out;
    Bits top = sig.size() >= 64 ? ~Bits(0) : (Bits(1) << sig.size());
    for (Bits m = 0; m < top; ++m)
        if (is_stable_model(gamma, sig, {m})) out.push_back({m});
    return out;
}

FormulaRef choice(const FormulaRef& f) {
    return Formula::disj(f, Formula::negate(f));
}

std::vector<FormulaRef> choice_all(const std::vector<FormulaRef>& gamma) {
    std::vector<FormulaRef> out;
    out.reserve(gamma.size());
    for (const auto& f : gamma) out.push_back(choice(f));
    return out;
}

std::optional<Interpretation> classical_countermodel(const FormulaRef& f,
                                                     const FormulaRef& g,
                                                     const Signature& sig) {
    std::set<std::string> names = atoms(f);
    collect_atoms(g, names);
    std::vector<int> idx;
    for (const auto& n : names) idx.push_back(sig.index(n));

    Bits n = static_cast<Bits>(idx.size());
    for (Bits m = 0; m < (Bits(1) << n); ++m) {
        Interpretation x{0};
        for (size_t i = 0; i < idx.size(); ++i)
            if ((m >> i) & 1u) x.bits |= Bits(1) << idx[i];
        if (satisfies(sig, x, f) != satisfies(sig, x, g)) return x;
    }
    return std::nullopt;
}

FormulaRef conjoin(const std::vector<FormulaRef>& gamma) {
    if (gamma.empty()) return Formula::top();
    FormulaRef acc = gamma.front();
    for (size_t i = 1; i < gamma.size(); ++i) acc = Formula::conj(acc, gamma[i]);
    return acc;
}

}  // namespace lpmln
