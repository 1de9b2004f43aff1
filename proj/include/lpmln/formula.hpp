#pragma once

#include <memory>
#include <set>
#include <string>

namespace lpmln {

enum class Conn { Atom, Bottom, And, Or, Implies };

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable propositional formula over the core connectives {bot, &, |, ->}.
// `not F` and `top` are surface sugar: construction normalizes them to
// F -> bot and bot -> bot, and the renderer re-sugars on output.
class Formula {
public:
    Conn conn() const { return conn_; }
    const std::string& atom_name() const { return atom_; }
    const FormulaRef& lhs() const { return lhs_; }
    const FormulaRef& rhs() const { return rhs_; }

    bool is_negation() const {
        return conn_ == Conn::Implies && rhs_->conn_ == Conn::Bottom;
    }
    bool is_top() const {
        return is_negation() && lhs_->conn_ == Conn::Bottom;
    }

    static FormulaRef atom(std::string name);
    static FormulaRef bottom();
    static FormulaRef top() { return implies(bottom(), bottom()); }
    static FormulaRef negate(FormulaRef f) { return implies(std::move(f), bottom()); }
    static FormulaRef conj(FormulaRef l, FormulaRef r);
    static FormulaRef disj(FormulaRef l, FormulaRef r);
    static FormulaRef implies(FormulaRef l, FormulaRef r);

private:
    Formula(Conn c, std::string a, FormulaRef l, FormulaRef r)
        : conn_(c), atom_(std::move(a)), lhs_(std::move(l)), rhs_(std::move(r)) {}

    Conn conn_;
    std::string atom_;
    FormulaRef lhs_;
    FormulaRef rhs_;
};

bool same_formula(const FormulaRef& a, const FormulaRef& b);

std::set<std::string> atoms(const FormulaRef& f);
void collect_atoms(const FormulaRef& f, std::set<std::string>& out);

enum class Dialect { Internal, F2lp };

std::string render(const FormulaRef& f, Dialect dialect = Dialect::Internal);

}  // namespace lpmln
