#include "lpmln/formula.hpp"

#include <stdexcept>

namespace lpmln {

namespace {

bool valid_atom_name(const std::string& name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    for (char c : name) {
        // apostrophes admit the internal primed-copy convention; the
        // surface syntax never produces them
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '\'';
        if (!ok) return false;
    }
    return true;
}

}  // namespace

FormulaRef Formula::atom(std::string name) {
    if (!valid_atom_name(name))
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    return FormulaRef(new Formula(Conn::Atom, std::move(name), nullptr, nullptr));
}

FormulaRef Formula::bottom() {
    static const FormulaRef bot(new Formula(Conn::Bottom, "", nullptr, nullptr));
    return bot;
}

FormulaRef Formula::conj(FormulaRef l, FormulaRef r) {
    return FormulaRef(new Formula(Conn::And, "", std::move(l), std::move(r)));
}

FormulaRef Formula::disj(FormulaRef l, FormulaRef r) {
    return FormulaRef(new Formula(Conn::Or, "", std::move(l), std::move(r)));
}

FormulaRef Formula::implies(FormulaRef l, FormulaRef r) {
    return FormulaRef(new Formula(Conn::Implies, "", std::move(l), std::move(r)));
}

bool same_formula(const FormulaRef& a, const FormulaRef& b) {
    if (a.get() == b.get()) return true;
    if (a->conn() != b->conn()) return false;
    switch (a->conn()) {
        case Conn::Atom: return a->atom_name() == b->atom_name();
        case Conn::Bottom: return true;
        default:
            return same_formula(a->lhs(), b->lhs()) && same_formula(a->rhs(), b->rhs());
    }
}

void collect_atoms(const FormulaRef& f, std::set<std::string>& out) {
    switch (f->conn()) {
        case Conn::Atom: out.insert(f->atom_name()); break;
        case Conn::Bottom: break;
        default:
            collect_atoms(f->lhs(), out);
            collect_atoms(f->rhs(), out);
    }
}

std::set<std::string> atoms(const FormulaRef& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

namespace {

// Precedence levels, loosest first: -> (1), | (2), & (3), not/atom (4).
int precedence(const FormulaRef& f) {
    if (f->conn() == Conn::Atom || f->conn() == Conn::Bottom) return 5;
    if (f->is_top() || f->is_negation()) return 4;
    switch (f->conn()) {
        case Conn::And: return 3;
        case Conn::Or: return 2;
        default: return 1;
    }
}

void print(const FormulaRef& f, Dialect d, int parent_prec, std::string& out) {
    int prec = precedence(f);
    bool parens = prec < parent_prec;
    if (parens) out += '(';
    if (f->is_top()) {
        out += d == Dialect::F2lp ? "true" : "top";
    } else if (f->is_negation()) {
        out += "not ";
        print(f->lhs(), d, 4, out);
    } else {
        switch (f->conn()) {
            case Conn::Atom:
                out += f->atom_name();
                break;
            case Conn::Bottom:
                out += d == Dialect::F2lp ? "false" : "bot";
                break;
            case Conn::And:
                // left-associative: a nested & on the right needs parens
                print(f->lhs(), d, 3, out);
                out += " & ";
                print(f->rhs(), d, 4, out);
                break;
            case Conn::Or:
                print(f->lhs(), d, 2, out);
                out += " | ";
                print(f->rhs(), d, 3, out);
                break;
            case Conn::Implies:
                // right-associative: parenthesize a nested -> on the left
                print(f->lhs(), d, 2, out);
                out += " -> ";
                print(f->rhs(), d, 1, out);
                break;
        }
    }
    if (parens) out += ')';
}

}  // namespace

std::string render(const FormulaRef& f, Dialect dialect) {
    std::string out;
    print(f, dialect, 0, out);
    return out;
}

}  // namespace lpmln
