#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "malcev/algebra.hpp"
#include "malcev/builtins.hpp"
#include "malcev/errors.hpp"
#include "malcev/free_algebra.hpp"
#include "test_support.hpp"

using namespace malcev;
using namespace malcev::testing;

using BruteClassifier = BruteForceToleranceOracle;

TEST_SUITE("fin_algebra") {
    TEST_CASE("construction validates tables") {
        CHECK_THROWS_AS(Algebra(2, {{"f", 1, {0, 1, 0}}}), std::invalid_argument);
        CHECK_THROWS_AS(Algebra(2, {{"f", 1, {0, 2}}}), std::invalid_argument);
        CHECK_THROWS_AS(Algebra(0, {}), std::invalid_argument);
        const Algebra z2 = *named_algebra("z2");
        CHECK(z2.apply(0, std::vector<int>{1, 1}) == 0);
        CHECK(z2.apply(1, std::vector<int>{}) == 0);
    }

    TEST_CASE("direct square works componentwise") {
        const Algebra sq = named_algebra("z2")->direct_square();
        CHECK(sq.size() == 4);
        // (1,0) + (1,1) = (0,1): encoded 2 + 3 -> 1.
        CHECK(sq.apply(0, std::vector<int>{2, 3}) == 1);
    }

    TEST_CASE("compatibility basics") {
        const Algebra chain2 = *named_algebra("chain2");
        CHECK(is_compatible(chain2, Relation::diagonal(2)));
        CHECK(is_compatible(chain2, Relation::full(2)));
        CHECK(is_compatible(chain2, Relation::from_pairs(2, {{0, 1}}, true)));
        const Algebra z2 = *named_algebra("z2");
        CHECK_FALSE(is_compatible(z2, Relation::from_pairs(2, {{0, 1}}, true)));
        CHECK_THROWS_AS(is_compatible(z2, Relation::diagonal(3)), std::invalid_argument);
    }

    TEST_CASE("congruences of the built-ins") {
        CHECK(congruences(*named_algebra("z2")).size() == 2);

        const auto chain3_congs = congruences(*named_algebra("chain3"));
        REQUIRE(chain3_congs.size() == 4);
        const Relation low = Relation::from_pairs(3, {{0, 1}, {1, 0}}, true);
        const Relation high = Relation::from_pairs(3, {{1, 2}, {2, 1}}, true);
        CHECK(std::count(chain3_congs.begin(), chain3_congs.end(), Relation::diagonal(3)) == 1);
        CHECK(std::count(chain3_congs.begin(), chain3_congs.end(), low) == 1);
        CHECK(std::count(chain3_congs.begin(), chain3_congs.end(), high) == 1);
        CHECK(std::count(chain3_congs.begin(), chain3_congs.end(), Relation::full(3)) == 1);

        // No operations: every partition of a 3-set.
        CHECK(congruences(*named_algebra("set3")).size() == 5);
        CHECK(std::is_sorted(chain3_congs.begin(), chain3_congs.end()));
    }

    TEST_CASE("congruence enumeration cap") {
        std::vector<OperationTable> none;
        CHECK_THROWS_AS(congruences(Algebra(9, std::move(none))), CapError);
    }

    TEST_CASE("tolerance classification on the opless 3-set") {
        const Algebra set3 = *named_algebra("set3");
        const auto records = tolerances(set3);
        CHECK(records.size() == 8); // every reflexive symmetric relation is compatible

        const BruteClassifier oracle(set3);
        for (const auto& rec : records) CHECK(rec.cls == oracle.classify(rec.relation));

        // The path-shaped tolerance 0-1-2 is representable but not a congruence.
        const Relation path = Relation::from_pairs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}, true);
        const auto it = std::find_if(records.begin(), records.end(),
                                     [&](const ToleranceRecord& r) { return r.relation == path; });
        REQUIRE(it != records.end());
        CHECK(it->cls == ToleranceClass::representable);
    }

    TEST_CASE("tolerance classification matches the oracle on chain3") {
        const Algebra chain3 = *named_algebra("chain3");
        const BruteClassifier oracle(chain3);
        for (const auto& rec : tolerances(chain3)) CHECK(rec.cls == oracle.classify(rec.relation));
    }

    TEST_CASE("congruences are classified as congruences and sit inside tolerances") {
        for (const char* name : {"z2", "chain2", "chain3", "set3"}) {
            const Algebra alg = *named_algebra(name);
            const auto congs = congruences(alg);
            const auto tols = tolerances(alg);
            for (const auto& c : congs) {
                const auto it =
                    std::find_if(tols.begin(), tols.end(),
                                 [&](const ToleranceRecord& r) { return r.relation == c; });
                REQUIRE(it != tols.end());
                CHECK(it->cls == ToleranceClass::congruence);
            }
            // Cumulativity: a congruence is representable outright (R = the
            // congruence itself), and representable implies the canonical
            // intersection collapses.
            const auto reflexives = compatible_reflexive_relations(alg);
            for (const auto& rec : tols) {
                if (rec.cls > ToleranceClass::representable) continue;
                bool witnessed = false;
                for (const auto& r : reflexives)
                    if (compose(r, converse(r)) == rec.relation) witnessed = true;
                CHECK(witnessed);
            }
        }
    }

    TEST_CASE("compatible reflexive relations of set3 are all 64 reflexive relations") {
        CHECK(compatible_reflexive_relations(*named_algebra("set3")).size() == 64);
    }

    TEST_CASE("generated congruence") {
        const Algebra z2sq = named_algebra("z2")->direct_square();
        CHECK(generated_congruence(z2sq, {}) == Relation::diagonal(4));

        // Collapsing (0,0) with (1,0) gives the kernel of the second projection:
        // classes {(0,0),(1,0)} and {(0,1),(1,1)}, encoded {0,2} and {1,3}.
        const Relation cg = generated_congruence(z2sq, {{0, 2}});
        CHECK(cg == Relation::from_pairs(4, {{0, 2}, {2, 0}, {1, 3}, {3, 1}}, true));

        const Relation all = generated_congruence(z2sq, {{0, 1}, {1, 2}, {2, 3}});
        CHECK(all == Relation::full(4));
    }

    TEST_CASE("generated congruence is the least containing congruence") {
        std::mt19937_64 rng(20240805);
        for (const char* name : {"z2", "chain3", "set3"}) {
            const Algebra alg = *named_algebra(name);
            const auto congs = congruences(alg);
            std::uniform_int_distribution<int> element(0, alg.size() - 1);
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<std::pair<int, int>> pairs;
                std::uniform_int_distribution<int> count(0, 2);
                for (int i = 0, c = count(rng); i < c; ++i)
                    pairs.emplace_back(element(rng), element(rng));
                const Relation generated = generated_congruence(alg, pairs);
                CHECK(is_compatible(alg, generated));
                CHECK(generated.reflexive());
                CHECK(generated.symmetric());
                CHECK(generated.transitive());
                // Least: every congruence containing the pairs contains it.
                Relation least = Relation::full(alg.size());
                for (const auto& c : congs) {
                    bool contains_all = true;
                    for (const auto& [a, b] : pairs) contains_all &= c.contains(a, b);
                    if (contains_all && c.subset_of(least)) least = c;
                }
                CHECK(generated == least);
            }
        }
    }

    TEST_CASE("free algebra sizes") {
        const FreeAlgebra f_z2 = FreeAlgebra::generate(*named_algebra("z2"), 3);
        CHECK(f_z2.element_count() == 8);
        const FreeAlgebra f_chain2 = FreeAlgebra::generate(*named_algebra("chain2"), 3);
        CHECK(f_chain2.element_count() == 18);
        const FreeAlgebra one = FreeAlgebra::generate(*named_algebra("chain3"), 1);
        CHECK(one.element_count() >= 1);
        CHECK(one.generator(0) == 0);
    }

    TEST_CASE("free algebra caps") {
        FreeAlgebraCaps caps;
        caps.max_power_size = 4;
        CHECK_THROWS_AS(FreeAlgebra::generate(*named_algebra("z2"), 3, caps), CapError);
    }

    TEST_CASE("free algebra universal property") {
        // Every generator assignment extends to a homomorphism by evaluating
        // coordinates: check operation preservation at every assignment.
        for (const char* name : {"z2", "chain2"}) {
            const Algebra base = *named_algebra(name);
            const FreeAlgebra fa = FreeAlgebra::generate(base, 2);
            const Algebra lifted = fa.as_algebra();
            const int s = base.size();
            std::vector<int> gens(2);
            for (gens[0] = 0; gens[0] < s; ++gens[0]) {
                for (gens[1] = 0; gens[1] < s; ++gens[1]) {
                    for (std::size_t op = 0; op < base.operations().size(); ++op) {
                        const int arity = base.operations()[op].arity;
                        std::vector<int> args(arity, 0);
                        while (true) {
                            const int lifted_value = lifted.apply(static_cast<int>(op), args);
                            std::vector<int> mapped(arity);
                            for (int j = 0; j < arity; ++j)
                                mapped[j] = fa.value_at(args[j], gens);
                            CHECK(fa.value_at(lifted_value, gens) == base.apply(op, mapped));
                            int j = arity - 1;
                            while (j >= 0 && ++args[j] == fa.element_count()) args[j--] = 0;
                            if (j < 0) break;
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("free algebra elements are their own value tables") {
        const FreeAlgebra fa = FreeAlgebra::generate(*named_algebra("z2"), 3);
        // The generators evaluate as projections.
        for (int j = 0; j < 3; ++j) {
            std::vector<int> vals{0, 1, 1};
            CHECK(fa.value_at(fa.generator(j), vals) == vals[j]);
        }
    }
}
