#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpmln/delta.hpp"
#include "lpmln/ht.hpp"
#include "support.hpp"

using namespace lpmln;
using namespace lpmln::test;

TEST_CASE("transform clauses") {
    Signature base({"a", "b"});
    PrimedSignature ps(base);
    CHECK(render(delta(parse_formula("a"), ps)) == "a'");
    // negations are left untouched
    CHECK(render(delta(parse_formula("not (a & b)"), ps)) == "not (a & b)");
    CHECK(render(delta(parse_formula("a & b"), ps)) == "a' & b'");
    CHECK(render(delta(parse_formula("a | b"), ps)) == "a' | b'");
    // Delta(F -> G) = (Delta F -> Delta G) & (F -> G)
    CHECK(render(delta(parse_formula("a -> b"), ps)) == "(a' -> b') & (a -> b)");
}

TEST_CASE("primed signatures") {
    Signature base({"a", "b"});
    PrimedSignature tick(base);
    CHECK(tick.extended().size() == 4);
    CHECK(tick.primed_name("a") == "a'");
    CHECK(tick.assignment(interp(base, {"a"}), interp(base, {"a", "b"})).bits ==
          0b0111);

    PrimedSignature doubled(base, PrimedStyle::Doubled);
    CHECK(doubled.primed_name("b") == "bb");

    Signature clash({"a", "aa"});
    CHECK_THROWS_AS(PrimedSignature(clash, PrimedStyle::Doubled),
                    PrimedNameCollisionError);
}

TEST_CASE("primed-assignment conditions match HT satisfaction (randomized)") {
    // Lemma, Delta form: <Y, X> is a soft HT model iff Y' u X satisfies
    // Delta of the satisfied part, iff Y' u X satisfies Delta of the
    // choice program.
    Gen gen(1212);
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        const Signature& sig = p.signature();
        PrimedSignature ps(sig);
        for (Bits x = 0; x < (Bits(1) << sig.size()); ++x)
            for (Bits y = x;; y = (y - 1) & x) {
                bool a = is_soft_ht_model({{y}, {x}}, p);
                Interpretation yx = ps.assignment({y}, {x});
                std::vector<FormulaRef> d, dch;
                for (const auto& f : satisfied_part(p, {x}).bare())
                    d.push_back(delta(f, ps));
                for (const auto& f : choice_all(p.bare()))
                    dch.push_back(delta(f, ps));
                CHECK(a == satisfies(ps.extended(), yx, conjoin(d)));
                CHECK(a == satisfies(ps.extended(), yx, conjoin(dch)));
                if (y == 0) break;
            }
    }
}

TEST_CASE("stability via Delta and via second-order expansion (randomized)") {
    Gen gen(1313);
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        const Signature& sig = p.signature();
        for (Bits x = 0; x < (Bits(1) << sig.size()); ++x) {
            bool expected = is_soft_stable_model(p, {x});
            CHECK(delta_stable_check(p, {x}) == expected);
            CHECK(second_order_stable_check(p, {x}) == expected);
        }
    }
}

TEST_CASE("entailment conditions separate the example programs") {
    CHECK(delta_condition_check(ex3_F(), ex3_G(), DeltaMode::PerX));
    CHECK(delta_condition_check(ex3_F(), ex3_G(), DeltaMode::Choice));

    // The earliest separating interpretation is X = {a} (the pair <{}, {a}>
    // is an HT model of one program only); {a, b} separates them as well.
    auto cm = delta_condition_countermodel(ex3_Fp(), ex3_G(), DeltaMode::PerX);
    REQUIRE(cm.has_value());
    WeightedProgram fp = ex3_Fp();
    const Signature& sig = fp.signature();
    CHECK(cm->x == interp(sig, {"a"}));
    CHECK(cm->y == interp(sig, {}));

    CHECK(!delta_condition_check(ex3_Fp(), ex3_G(), DeltaMode::Choice));
}

TEST_CASE("both entailment modes agree (randomized)") {
    Gen gen(1414);
    for (int i = 0; i < 500; ++i) {
        WeightedProgram f = gen.program();
        WeightedProgram g = gen.program();
        CHECK(delta_condition_check(f, g, DeltaMode::PerX) ==
              delta_condition_check(f, g, DeltaMode::Choice));
    }
}
