#include <doctest.h>

#include <random>

#include "malcev/relation.hpp"
#include "test_support.hpp"

using namespace malcev;
using namespace malcev::testing;

TEST_SUITE("relation") {
    TEST_CASE("construction and caps") {
        CHECK_THROWS_AS(Relation(0), std::invalid_argument);
        CHECK_THROWS_AS(Relation(65), std::invalid_argument);
        CHECK_NOTHROW(Relation(64));
        CHECK(Relation::diagonal(3).reflexive());
        CHECK(Relation::diagonal(3).symmetric());
        CHECK(Relation::diagonal(3).transitive());
        CHECK(Relation::full(3).pair_count() == 9);
    }

    TEST_CASE("universe mismatch is rejected") {
        CHECK_THROWS_AS(compose(Relation(2), Relation(3)), std::invalid_argument);
        CHECK_THROWS_AS(intersect(Relation(2), Relation(3)), std::invalid_argument);
        CHECK_THROWS_AS(union_rel(Relation(2), Relation(3)), std::invalid_argument);
    }

    TEST_CASE("compose basics") {
        const Relation r = Relation::from_pairs(3, {{0, 1}, {1, 0}}, true);
        const Relation t = Relation::from_pairs(3, {{1, 2}, {2, 1}}, true);
        CHECK(compose(Relation::diagonal(3), r) == r);
        CHECK(compose(r, Relation::diagonal(3)) == r);
        CHECK(compose(r, t).contains(0, 2));
        CHECK_FALSE(compose(t, r).contains(0, 2));
    }

    TEST_CASE("compose against the naive oracle") {
        std::mt19937_64 rng(20240801);
        for (int size : {1, 2, 3, 4, 5}) {
            for (int trial = 0; trial < 40; ++trial) {
                const Relation r = random_relation(size, rng);
                const Relation t = random_relation(size, rng);
                CHECK(compose(r, t) == compose_oracle(r, t));
            }
        }
        // The one-directional example: R = diagonal plus (0,1).
        const Relation r = Relation::from_pairs(3, {{0, 1}}, true);
        CHECK(compose(r, converse(r)) == compose_oracle(r, converse(r)));
        CHECK(compose(r, converse(r)).contains(0, 0));
        CHECK(compose(r, converse(r)).contains(0, 1));
        CHECK(compose(r, converse(r)).contains(1, 0));
    }

    TEST_CASE("converse and intersect basics") {
        const Relation sym = Relation::from_pairs(3, {{0, 1}, {1, 0}}, true);
        CHECK(converse(sym) == sym);
        CHECK(intersect(sym, Relation::full(3)) == sym);
        const Relation asym = Relation::from_pairs(2, {{0, 1}});
        CHECK(converse(asym).contains(1, 0));
        CHECK_FALSE(converse(asym).contains(0, 1));
    }

    TEST_CASE("union then symmetrize gives a tolerance-shaped relation") {
        const Relation part = Relation::from_pairs(3, {{0, 1}});
        const Relation u = union_rel(Relation::diagonal(3), part);
        const Relation t = union_rel(u, converse(u));
        CHECK(t.reflexive());
        CHECK(t.symmetric());
    }

    TEST_CASE("compose is associative, diagonal is a two-sided identity") {
        // Exhaustive over reflexive symmetric triples up to size 4.
        for (int size : {2, 3, 4}) {
            const auto rels = all_tolerance_shaped(size);
            for (const auto& a : rels)
                for (const auto& b : rels)
                    for (const auto& c : rels)
                        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            const Relation a = random_relation(4, rng);
            const Relation b = random_relation(4, rng);
            const Relation c = random_relation(4, rng);
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
        for (int size : {2, 3, 4}) {
            for (const auto& r : all_relations(size)) {
                CHECK(compose(Relation::diagonal(size), r) == r);
                CHECK(compose(r, Relation::diagonal(size)) == r);
            }
        }
    }

    TEST_CASE("converse anti-distributes over composition") {
        for (const auto& r : all_relations(3))
            for (const auto& t : all_tolerance_shaped(3))
                CHECK(converse(compose(r, t)) == compose(converse(t), converse(r)));
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const Relation r = random_relation(4, rng);
            const Relation t = random_relation(4, rng);
            CHECK(converse(compose(r, t)) == compose(converse(t), converse(r)));
        }
    }

    TEST_CASE("power tower is monotone for reflexive relations") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            const Relation r = random_relation(5, rng, true);
            for (int k = 1; k <= 4; ++k) {
                CHECK(r.subset_of(power(r, k)));
                CHECK(power(r, k).subset_of(power(r, k + 1)));
            }
        }
        CHECK_THROWS_AS(power(Relation(2), 0), std::invalid_argument);
    }

    TEST_CASE("power examples") {
        const Relation theta =
            Relation::from_pairs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}, true);
        CHECK(power(theta, 1) == theta);
        const Relation squared = power(theta, 2);
        CHECK(squared.contains(0, 2));
        CHECK(squared.contains(2, 0));
        CHECK(squared == compose_oracle(theta, theta));
        // Congruences are stable under powers.
        const Relation cong = Relation::from_pairs(3, {{0, 1}, {1, 0}}, true);
        CHECK(power(cong, 2) == cong);
        CHECK(power(cong, 5) == cong);
    }

    TEST_CASE("alternating composition") {
        const Relation b = Relation::from_pairs(3, {{0, 1}, {1, 0}}, true);
        const Relation c = Relation::from_pairs(3, {{1, 2}, {2, 1}}, true);
        CHECK(alternate_compose(b, c, 1) == b);
        CHECK(alternate_compose(b, c, 3) == compose(compose(b, c), b));
        CHECK(alternate_compose(b, c, 5) == compose(compose(compose(compose(b, c), b), c), b));
        CHECK(alternate_compose(Relation::diagonal(3), c, 3) == c);
        CHECK_THROWS_AS(alternate_compose(b, c, 2), std::invalid_argument);
        CHECK_THROWS_AS(alternate_compose(b, c, -1), std::invalid_argument);

        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            const Relation rb = random_relation(4, rng, true);
            const Relation rc = random_relation(4, rng, true);
            for (int m : {1, 3, 5})
                CHECK(alternate_compose(rb, rc, m).subset_of(alternate_compose(rb, rc, m + 2)));
        }
    }

    TEST_CASE("flags track the matrix") {
        Relation r = Relation::diagonal(3);
        CHECK(r.transitive());
        r.add(0, 1);
        CHECK_FALSE(r.symmetric());
        r.add(1, 0);
        CHECK(r.symmetric());
        r.add(1, 2);
        r.add(2, 1);
        CHECK_FALSE(r.transitive());
    }
}
