#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpmln/ht.hpp"
#include "support.hpp"

using namespace lpmln;
using namespace lpmln::test;

namespace {

HTInterpretation ht(const Signature& sig, const std::vector<std::string>& here,
                    const std::vector<std::string>& there) {
    return {interp(sig, here), interp(sig, there)};
}

}  // namespace

TEST_CASE("soft HT model grid for the three example programs") {
    WeightedProgram f = ex3_F(), g = ex3_G(), fp = ex3_Fp();
    const Signature& sig = f.signature();
    struct Row {
        std::vector<std::string> here, there;
        bool f, g, fp;
    };
    std::vector<Row> rows = {
        {{}, {}, true, true, true},
        {{}, {"a"}, false, false, true},
        {{"a"}, {"a"}, true, true, true},
        {{}, {"b"}, true, true, true},
        {{"b"}, {"b"}, true, true, true},
        {{}, {"a", "b"}, false, false, true},
        {{"a"}, {"a", "b"}, false, false, false},
        {{"b"}, {"a", "b"}, false, false, true},
        {{"a", "b"}, {"a", "b"}, true, true, true},
    };
    for (const auto& row : rows) {
        HTInterpretation i = ht(sig, row.here, row.there);
        CAPTURE(to_string(i, sig));
        CHECK(is_soft_ht_model(i, f) == row.f);
        CHECK(is_soft_ht_model(i, g) == row.g);
        CHECK(is_soft_ht_model(i, fp) == row.fp);
    }
    CHECK(soft_ht_models(f) == soft_ht_models(g));
}

TEST_CASE("excluded middle fails in HT") {
    Signature sig({"a"});
    HTInterpretation i = ht(sig, {}, {"a"});
    CHECK(!ht_satisfies(sig, i, parse_formula("a | not a")));
    // but it holds at the there-world (classically)
    CHECK(ht_satisfies_at(sig, i, World::There, parse_formula("a | not a")));
}

TEST_CASE("the HT axiom F | (F -> G) | not G is valid (randomized)") {
    Gen gen(808);
    Signature sig({"a", "b", "c"});
    for (int i = 0; i < 1000; ++i) {
        FormulaRef f = gen.formula({"a", "b", "c"}, 2);
        FormulaRef g = gen.formula({"a", "b", "c"}, 2);
        FormulaRef axiom = Formula::disj(
            Formula::disj(f, Formula::implies(f, g)), Formula::negate(g));
        for (Bits t = 0; t < 8; ++t)
            for (Bits h = t;; h = (h - 1) & t) {
                CHECK(ht_satisfies(sig, {{h}, {t}}, axiom));
                if (h == 0) break;
            }
    }
}

TEST_CASE("persistence and there-world classicality (randomized)") {
    Gen gen(909);
    Signature sig({"a", "b", "c"});
    for (int i = 0; i < 1000; ++i) {
        FormulaRef f = gen.formula({"a", "b", "c"}, 2);
        for (Bits t = 0; t < 8; ++t)
            for (Bits h = t;; h = (h - 1) & t) {
                HTInterpretation i2{{h}, {t}};
                bool here = ht_satisfies(sig, i2, f);
                bool there = ht_satisfies_at(sig, i2, World::There, f);
                if (here) CHECK(there);                      // persistence
                CHECK(there == satisfies(sig, {t}, f));      // t-world is classical
                if (h == 0) break;
            }
    }
}

TEST_CASE("HT satisfaction agrees with the reduct characterization (randomized)") {
    // Lemma: <Y, X> is a soft HT model of p  iff  Y satisfies the reduct of
    // the satisfied part  iff  Y satisfies the reduct of the choice program.
    Gen gen(1010);
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        const Signature& sig = p.signature();
        for (Bits x = 0; x < (Bits(1) << sig.size()); ++x)
            for (Bits y = x;; y = (y - 1) & x) {
                bool a = is_soft_ht_model({{y}, {x}}, p);
                std::vector<FormulaRef> red, chred;
                for (const auto& fm : satisfied_part(p, {x}).bare())
                    red.push_back(reduct(fm, sig, {x}));
                for (const auto& fm : choice_all(p.bare()))
                    chred.push_back(reduct(fm, sig, {x}));
                bool b = satisfies(sig, {y}, conjoin(red));
                bool c = satisfies(sig, {y}, conjoin(chred));
                CHECK(a == b);
                CHECK(a == c);
                if (y == 0) break;
            }
    }
}

TEST_CASE("soft equilibrium models = soft stable models (randomized)") {
    Gen gen(1111);
    for (int i = 0; i < 1000; ++i) {
        WeightedProgram p = gen.program();
        CHECK(soft_equilibrium_models(p) == soft_stable_models(p));
    }
}

TEST_CASE("equilibrium models of the example programs") {
    WeightedProgram f = ex3_F(), fp = ex3_Fp();
    const Signature& sig = f.signature();
    std::vector<Interpretation> expected = {interp(sig, {}), interp(sig, {"a"}),
                                            interp(sig, {"a", "b"})};
    CHECK(soft_equilibrium_models(f) == expected);
    CHECK(soft_equilibrium_models(fp) == std::vector<Interpretation>{interp(sig, {})});
}
