#include "lpmln/aspgen.hpp"

#include <optional>

#include "lpmln/classical.hpp"
#include "lpmln/errors.hpp"
#include "lpmln/parser.hpp"

namespace lpmln {

namespace {

// A literal in the clingo rule-form sense: a, not a, or not not a.
struct BodyLiteral {
    std::string atom;
    int negations;  // 0, 1, or 2

    std::string str() const {
        std::string out;
        for (int i = 0; i < negations; ++i) out += "not ";
        return out + atom;
    }
    std::string negated() const {
        // one more `not`, collapsing triple negation to single
        int n = negations >= 2 ? 1 : negations + 1;
        BodyLiteral l{atom, n};
        return l.str();
    }
};

std::optional<BodyLiteral> as_literal(const FormulaRef& f, int max_neg) {
    int neg = 0;
    FormulaRef cur = f;
    while (cur->is_negation() && !cur->is_top()) {
        ++neg;
        cur = cur->lhs();
    }
    if (neg > max_neg || cur->conn() != Conn::Atom) return std::nullopt;
    return BodyLiteral{cur->atom_name(), neg};
}

bool flatten(const FormulaRef& f, Conn op, int max_neg, std::vector<BodyLiteral>& out) {
    if (f->conn() == op && !f->is_negation()) {
        return flatten(f->lhs(), op, max_neg, out) &&
               flatten(f->rhs(), op, max_neg, out);
    }
    auto lit = as_literal(f, max_neg);
    if (!lit) return false;
    out.push_back(*lit);
    return true;
}

struct RuleForm {
    std::vector<BodyLiteral> body;  // literals, up to `not not a`
    std::vector<BodyLiteral> head;  // disjuncts, up to `not a`
};

// Recognizes `Body -> Head` with a literal-conjunction body and a
// literal-disjunction head, or a bare head disjunction. Constraints and
// anything else fall back to the general f2lp form.
std::optional<RuleForm> as_rule_form(const FormulaRef& f) {
    RuleForm rf;
    if (f->conn() == Conn::Implies && !f->is_negation()) {
        if (!flatten(f->lhs(), Conn::And, 2, rf.body)) return std::nullopt;
        if (!flatten(f->rhs(), Conn::Or, 1, rf.head)) return std::nullopt;
        return rf;
    }
    if (!flatten(f, Conn::Or, 1, rf.head)) return std::nullopt;
    return rf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string unsat_atom(const std::string& prefix, const WeightedRule& r) {
    if (r.weight.is_alpha()) return prefix + "_unsat_h(" + std::to_string(r.index) + ")";
    if (!r.weight.value().is_integer()) throw NonIntegerWeightError(r.weight.str());
    return prefix + "_unsat_s(" + r.weight.value().str() + "," +
           std::to_string(r.index) + ")";
}

void emit_rule_pair(const WeightedRule& r, const std::string& prefix,
                    std::vector<std::string>& lines) {
    std::string unsat = unsat_atom(prefix, r);
    if (auto rf = as_rule_form(r.formula)) {
        std::vector<std::string> heads, bodies, unsat_body;
        for (const auto& h : rf->head) heads.push_back(h.str());
        for (const auto& b : rf->body) bodies.push_back(b.str());
        unsat_body = bodies;
        for (const auto& h : rf->head) unsat_body.push_back(h.negated());

        std::vector<std::string> rule_body = bodies;
        rule_body.push_back("not " + unsat);
        lines.push_back(join(heads, " | ") + " :- " + join(rule_body, ", ") + ".");
        lines.push_back(unsat + " :- " + join(unsat_body, ", ") + ".");
    } else {
        lines.push_back(render(r.formula, Dialect::F2lp) + " :- not " + unsat + ".");
        lines.push_back(unsat + " :- " +
                        render(Formula::negate(r.formula), Dialect::F2lp) + ".");
    }
}

void emit_program_rules(const WeightedProgram& p, const std::string& prefix,
                        std::vector<std::string>& lines) {
    for (const auto& r : p.rules()) emit_rule_pair(r, prefix, lines);
}

void emit_aggregates(int nf, int ng, std::vector<std::string>& lines) {
    auto range = [](int n) { return "1.." + std::to_string(n); };
    lines.push_back("f_pw_s(S) :- S = #sum{X, Y: f_unsat_s(X, Y), Y=" + range(nf) + "}.");
    lines.push_back("g_pw_s(S) :- S = #sum{X, Y: g_unsat_s(X, Y), Y=" + range(ng) + "}.");
    lines.push_back("f_pw_h(S) :- S = #count{W: f_unsat_h(W), W=" + range(nf) + "}.");
    lines.push_back("g_pw_h(S) :- S = #count{W: g_unsat_h(W), W=" + range(ng) + "}.");
}

std::vector<std::string> base_header() {
    return {
        "canonical whitespace: tokens are separated by single spaces;",
        "comparisons should collapse runs of spaces.",
        "unsat atoms for hard rules are unary (f_unsat_h(i)) in both the",
        "general and the rule-form emission.",
    };
}

std::string offset_term(long c) {
    if (c < 0) return "Y - " + std::to_string(-c);
    return "Y + " + std::to_string(c);
}

}  // namespace

AspDocument emit_weight_program(const WeightedProgram& pf, const WeightedProgram& pg,
                                bool fix_empty) {
    Signature sig = Signature::unite(pf.signature(), pg.signature());
    AspDocument doc;
    doc.header = base_header();
    doc.header.insert(doc.header.begin(),
                      "P: weight accounting for the two input programs (f2lp input).");
    emit_program_rules(pf, "f", doc.lines);
    emit_program_rules(pg, "g", doc.lines);
    emit_aggregates(pf.size(), pg.size(), doc.lines);
    if (fix_empty)
        for (const auto& name : sig.names()) doc.lines.push_back("not " + name + ".");
    return doc;
}

std::pair<AspDocument, AspDocument> emit_weight_check(const WeightedProgram& pf,
                                                      const WeightedProgram& pg,
                                                      long c1, long c2) {
    AspDocument base = emit_weight_program(pf, pg, false);
    base.header[0] =
        "P*: unsatisfiable iff the weight condition holds for every interpretation.";
    base.header.push_back(
        "split into soft-only and hard-only documents: a combined program is");
    base.header.push_back(
        "unsatisfiable when at least one equation holds per interpretation,");
    base.header.push_back("which is weaker than each condition holding everywhere.");

    AspDocument soft = base;
    soft.lines.push_back(":- f_pw_s(X), g_pw_s(Y), X = " + offset_term(c1) + ".");
    AspDocument hard = base;
    hard.lines.push_back(":- f_pw_h(X), g_pw_h(Y), X = " + offset_term(c2) + ".");
    return {soft, hard};
}

std::pair<AspDocument, AspDocument> emit_delta_programs(const WeightedProgram& pf,
                                                        const WeightedProgram& pg) {
    Signature sig = Signature::unite(pf.signature(), pg.signature());
    PrimedSignature ps(sig, PrimedStyle::Doubled);

    std::vector<std::string> choice_atoms;
    for (int i = 0; i < sig.size(); ++i) {
        choice_atoms.push_back(sig.name(i));
        choice_atoms.push_back(ps.extended().name(i + ps.n()));
    }

    std::vector<std::string> common;
    common.push_back("{" + join(choice_atoms, "; ") + "}.");
    for (int i = 0; i < sig.size(); ++i)
        common.push_back(ps.extended().name(i + ps.n()) + " -> " + sig.name(i) + ".");

    auto delta_lines = [&](const WeightedProgram& p) {
        std::vector<std::string> out;
        for (const auto& f : choice_all(p.with_signature(sig).bare()))
            out.push_back(render(delta(f, ps), Dialect::F2lp) + ".");
        return out;
    };
    auto negated_delta = [&](const WeightedProgram& p) {
        std::vector<FormulaRef> ds;
        for (const auto& f : choice_all(p.with_signature(sig).bare()))
            ds.push_back(delta(f, ps));
        return render(Formula::negate(conjoin(ds)), Dialect::F2lp) + ".";
    };

    AspDocument p1, p2;
    p1.header = {"P1**: satisfiable iff some HT model of the first program",
                 "is not an HT model of the second."};
    p1.lines = common;
    for (auto& l : delta_lines(pf)) p1.lines.push_back(std::move(l));
    p1.lines.push_back(negated_delta(pg));

    p2.header = {"P2**: satisfiable iff some HT model of the second program",
                 "is not an HT model of the first."};
    p2.lines = common;
    for (auto& l : delta_lines(pg)) p2.lines.push_back(std::move(l));
    p2.lines.push_back(negated_delta(pf));
    return {p1, p2};
}

bool asp_document_satisfiable(const AspDocument& doc) {
    Signature sig;
    std::vector<FormulaRef> constraints;
    for (const auto& line : doc.lines) {
        if (line.empty() || line[0] == '%') continue;
        if (line[0] == '{') {
            size_t close = line.find('}');
            std::string inner = line.substr(1, close - 1);
            size_t pos = 0;
            while (pos < inner.size()) {
                size_t sep = inner.find(';', pos);
                std::string name = inner.substr(pos, sep - pos);
                size_t a = name.find_first_not_of(' ');
                size_t b = name.find_last_not_of(' ');
                sig.add(name.substr(a, b - a + 1));
                if (sep == std::string::npos) break;
                pos = sep + 1;
            }
            continue;
        }
        std::string body = line.substr(0, line.find_last_of('.'));
        FormulaRef f = parse_formula(body);
        for (const auto& a : atoms(f)) sig.add(a);
        constraints.push_back(std::move(f));
    }

    Bits top = Bits(1) << sig.size();
    for (Bits m = 0; m < top; ++m) {
        bool ok = true;
        for (const auto& f : constraints)
            if (!satisfies(sig, {m}, f)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace lpmln
