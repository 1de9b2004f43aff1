#pragma once

#include <utility>

#include "lpmln/delta.hpp"
#include "lpmln/program.hpp"

namespace lpmln {

// A generated ASP text: `%` header comments plus rule lines, each ending
// with '.'. Rule-form specializations are valid clingo input directly; the
// general forms need f2lp.
struct AspDocument {
    std::vector<std::string> header;  // without the leading "% "
    std::vector<std::string> lines;

    std::string text() const {
        std::string out;
        for (const auto& h : header) out += "% " + h + "\n";
        if (!header.empty()) out += "\n";
        for (const auto& l : lines) out += l + "\n";
        return out;
    }
};

// The weight-accounting program P: per-rule unsat-atom pairs for both
// programs, the #sum/#count aggregate rules, and (with fix_empty) a
// `not p.` line per atom pinning X = {}. Requires integer soft weights.
AspDocument emit_weight_program(const WeightedProgram& pf, const WeightedProgram& pg,
                                bool fix_empty);

// The unsatisfiability checks: P without the `not p.` lines plus one
// constraint per document. Split into a soft-only and a hard-only document;
// a single combined program would be unsatisfiable whenever at least one of
// the two equations holds per interpretation, which is weaker than both
// conditions holding everywhere.
std::pair<AspDocument, AspDocument> emit_weight_check(const WeightedProgram& pf,
                                                      const WeightedProgram& pg,
                                                      long c1, long c2);

// P1** and P2**: choices over the base and doubled atoms, p' -> p bridges,
// the Delta of one choice-transformed program and the negated Delta of the
// other.
std::pair<AspDocument, AspDocument> emit_delta_programs(const WeightedProgram& pf,
                                                        const WeightedProgram& pg);

// Enumerates the logical content of a generated P1**/P2** document (choice
// line makes every atom free, so stable models coincide with classical
// models of the remaining lines). Lets tests validate emission semantics
// without an external solver.
bool asp_document_satisfiable(const AspDocument& doc);

}  // namespace lpmln
