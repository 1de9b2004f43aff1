#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpmln/semantics.hpp"
#include "support.hpp"

using namespace lpmln;
using namespace lpmln::test;

TEST_CASE("satisfied-part weight table for the strongly equivalent pair") {
    WeightedProgram f = ex3_F(), g = ex3_G();
    const Signature& sig = f.signature();
    struct Row {
        std::vector<std::string> x;
        int twf, twg;
    };
    std::vector<Row> rows = {
        {{}, 5, 3}, {{"a"}, 3, 1}, {{"b"}, 5, 3}, {{"a", "b"}, 5, 3}};
    for (const auto& row : rows) {
        Interpretation x = interp(sig, row.x);
        CHECK(total_weight(satisfied_part(f, x)) == WeightExpr::exp(Rational(row.twf)));
        CHECK(total_weight(satisfied_part(g, x)) ==
              WeightExpr::exp(Rational(row.twg)));
    }
}

TEST_CASE("soft stable models of the example pair") {
    WeightedProgram f = ex3_F(), g = ex3_G();
    const Signature& sig = f.signature();
    std::vector<Interpretation> expected = {interp(sig, {}), interp(sig, {"a"}),
                                            interp(sig, {"a", "b"})};
    CHECK(soft_stable_models(f) == expected);
    CHECK(soft_stable_models(g) == expected);
}

TEST_CASE("three-line distribution of {2: a|b, 1: <- a & b}") {
    WeightedProgram p = parse_program("2 : a | b.\n1 : <- a & b.\n");
    const Signature& sig = p.signature();
    SoftDistribution d = distribution(p);
    REQUIRE(d.support().size() == 3);
    CHECK(weight(p, interp(sig, {})) == WeightExpr::exp(Rational(1)));
    CHECK(weight(p, interp(sig, {"a"})) == WeightExpr::exp(Rational(3)));
    CHECK(weight(p, interp(sig, {"b"})) == WeightExpr::exp(Rational(3)));
    CHECK(weight(p, interp(sig, {"a", "b"})) == WeightExpr::zero());
    CHECK(d.probability(interp(sig, {"a"})) ==
          doctest::Approx(d.probability(interp(sig, {"b"}))));
    CHECK(d.probability_exact(interp(sig, {"a"})) == "exp(3)/Z");
}

TEST_CASE("hard rules dominate the distribution") {
    // alpha: a  vs the soft rules: only interpretations satisfying the hard
    // rule get positive probability.
    WeightedProgram p = parse_program("alpha : a.\n1 : b.\n#signature a, b.\n");
    const Signature& sig = p.signature();
    SoftDistribution d = distribution(p);
    CHECK(d.max_hard() == 1);
    CHECK(!d.positive(interp(sig, {})));
    CHECK(d.positive(interp(sig, {"a"})));
    CHECK(d.positive(interp(sig, {"a", "b"})));
}

TEST_CASE("the empty interpretation is always a soft stable model") {
    // Rules {} falsifies are dropped from the satisfied part, and {} is a
    // minimal model of any set of formulas it satisfies, so the model set
    // (and hence the distribution) is never empty.
    Gen gen(707);
    for (int i = 0; i < 300; ++i) {
        WeightedProgram p = gen.program();
        CHECK(is_soft_stable_model(p, {0}));
        CHECK_NOTHROW(distribution(p));
    }
    CHECK(is_soft_stable_model(parse_program("alpha : a <- not a.\n"), {0}));
}

TEST_CASE("weight identity: W = TW * penalty weight (randomized)") {
    Gen gen(404);
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        const Signature& sig = p.signature();
        WeightExpr tw = total_weight(p);
        for (Bits m = 0; m < (Bits(1) << sig.size()); ++m) {
            Interpretation x{m};
            CHECK(weight(p, x) == tw * penalty_weight(p, x));
        }
    }
}

TEST_CASE("weight-based and penalty-based distributions coincide (randomized)") {
    Gen gen(505);
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        std::vector<Interpretation> ssm = soft_stable_models(p);
        if (ssm.empty()) continue;
        ++compared;
        CHECK(same_distribution(distribution(p), penalty_distribution(p)));
    }
    CHECK(compared > 500);
}

TEST_CASE("soft stable models = stable models of the choice program (randomized)") {
    Gen gen(606);
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        CHECK(soft_stable_models(p) ==
              stable_models(choice_all(p.bare()), p.signature()));
    }
}

TEST_CASE("unsat sums and counts") {
    WeightedProgram p =
        parse_program("2 : a.\n-3 : b.\nalpha : a | b.\nalpha : a & b.\n");
    const Signature& sig = p.signature();
    Interpretation a = interp(sig, {"a"});
    CHECK(unsat_soft_sum(p, a) == Rational(-3));
    CHECK(unsat_hard_count(p, a) == 1);
    CHECK(unsat_soft_sum(p, interp(sig, {})) == Rational(2) + Rational(-3));
    CHECK(unsat_hard_count(p, interp(sig, {})) == 2);
}
