#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "symq/adversary.hpp"
#include "symq/rng.hpp"

using namespace symq;

TEST_CASE("Grover relation") {
    for (int n : {2, 4, 7}) {
        AdversaryBound ab = adversary_bound(weight_relation(n, 0, 1));
        CHECK(ab.alpha == Frac(1, n));
        CHECK(ab.bound == std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("weight relation shapes") {
    InputRelation single = weight_relation(3, 0, 3);
    CHECK(single.pairs.size() == 1);
    InputRelation r12 = weight_relation(3, 1, 2);
    // each weight-1 word dominates into exactly 2 weight-2 partners
    std::vector<int> deg(r12.side_a.size(), 0);
    for (auto [ia, ib] : r12.pairs) ++deg[ia];
    for (int d : deg) CHECK(d == 2);
    CHECK_THROWS_AS(weight_relation(4, 2, 2), std::invalid_argument);
}

TEST_CASE("weight relation matches the closed form") {
    for (int n = 1; n <= 6; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                AdversaryBound ab = adversary_bound(weight_relation(n, a, b));
                CHECK(ab.alpha == Frac(static_cast<long long>(b - a) * (b - a),
                                       static_cast<long long>(n - a) * b));
                double expect = std::sqrt(static_cast<double>(n - a) * b) / (b - a);
                CHECK(std::abs(ab.bound - expect) <= 1e-9);
            }
        }
    }
}

TEST_CASE("adversary_bound validates its relation") {
    CHECK_THROWS_AS(adversary_bound(InputRelation{}), std::invalid_argument);
    InputRelation overlap;
    overlap.side_a = {InputWord({1, 2}, 2)};
    overlap.side_b = {InputWord({1, 2}, 2)};
    overlap.pairs = {{0, 0}};
    CHECK_THROWS_AS(adversary_bound(overlap), std::invalid_argument);
    InputRelation uncovered;
    uncovered.side_a = {InputWord({1, 1}, 2), InputWord({2, 2}, 2)};
    uncovered.side_b = {InputWord({1, 2}, 2)};
    uncovered.pairs = {{0, 0}};
    CHECK_THROWS_AS(adversary_bound(uncovered), std::invalid_argument);
}

TEST_CASE("chop relation frozen alphas") {
    // values confirmed by an independent brute-force enumeration
    {
        ChopInstance inst{TypeProfile({4}), {0}, 2, 3};
        AdversaryBound ab = adversary_bound(chop_relation(inst));
        CHECK(ab.alpha == Frac(1, 4));  // within d/(N-d) = 1
    }
    {
        ChopInstance inst{TypeProfile({2, 2, 1, 1}), {0}, 1, 5};
        AdversaryBound ab = adversary_bound(chop_relation(inst));
        CHECK(ab.alpha == Frac(49, 400));  // within d/(N-d) = 1/5
    }
}

TEST_CASE("chop relation instance validation") {
    ChopInstance no_rows{TypeProfile({4}), {}, 2, 3};
    CHECK_THROWS_AS(no_rows.validate(), std::invalid_argument);
    ChopInstance full_chop{TypeProfile({4}), {0}, 4, 3};
    CHECK_THROWS_AS(full_chop.validate(), std::invalid_argument);
    ChopInstance too_deep{TypeProfile({4, 1}), {0}, 3, 4};  // d = 3 > N/2
    CHECK_THROWS_AS(too_deep.validate(), std::invalid_argument);
    ChopInstance tiny_alphabet{TypeProfile({4}), {0}, 2, 1};
    CHECK_THROWS_AS(tiny_alphabet.validate(), std::invalid_argument);
}

TEST_CASE("membership predicate agrees with the generator") {
    ChopInstance inst{TypeProfile({2, 2}), {1}, 1, 4};
    InputRelation rel = chop_relation(inst);
    std::set<std::pair<std::vector<int>, std::vector<int>>> generated;
    for (auto [ia, ib] : rel.pairs)
        generated.emplace(rel.side_a[ia].entries, rel.side_b[ib].entries);
    long long agree = 0;
    for (const auto& x : rel.side_a) {
        for (const auto& y : rel.side_b) {
            bool gen = generated.count({x.entries, y.entries}) > 0;
            bool pred = chop_relation_contains(inst, x, y);
            CHECK(gen == pred);
            agree += gen == pred;
        }
    }
    CHECK(agree == static_cast<long long>(rel.side_a.size() * rel.side_b.size()));
}

TEST_CASE("the pictured transformation is in the relation") {
    // N=11, two rows of length 3 chopped by 2: change two 1s and two 2s to
    // fresh symbols and swap the four changed elements with four others.
    ChopInstance inst{TypeProfile({3, 3, 1, 1, 1, 1, 1}), {0, 1}, 2, 11};
    InputWord x({1, 1, 1, 2, 2, 2, 3, 4, 5, 6, 7}, 11);
    InputWord y({3, 4, 1, 5, 6, 2, 8, 8, 9, 9, 7}, 11);
    CHECK(chop_relation_contains(inst, x, y));
    // wrong fresh multiplicity is rejected
    InputWord bad({3, 4, 1, 5, 6, 2, 8, 8, 8, 9, 7}, 11);
    CHECK(!chop_relation_contains(inst, x, bad));
}

TEST_CASE("measured alpha on a mixed instance exceeding the d/(N-d) line") {
    // On (3,2) -> (2,2,1) the exact product maximum is 1/3 at every alphabet
    // size, above d/(N-d) = 1/4; the acceptance families never produce this
    // shape. Pinned here as a regression value.
    ChopInstance inst{TypeProfile({3, 2}), {0}, 1, 4};
    AdversaryBound ab = adversary_bound(chop_relation(inst));
    CHECK(ab.alpha == Frac(1, 3));
}

TEST_CASE("relabeling symbols preserves the bound") {
    ChopInstance inst{TypeProfile({2, 2}), {0, 1}, 1, 4};
    InputRelation rel = chop_relation(inst);
    AdversaryBound base = adversary_bound(rel);
    std::vector<int> perm{3, 1, 4, 2};
    AdversaryBound relabeled = adversary_bound(relabel_relation(rel, perm, 4));
    CHECK(base.alpha == relabeled.alpha);
}

TEST_CASE("set equality embedding") {
    TypeProfile prev({4});
    SECTION("equal sets give the previous type") {
        InputWord x = embed_set_equality({7}, {7}, prev, {0}, 2, {});
        CHECK(type_of(x) == prev);
    }
    SECTION("disjoint sets give the next type") {
        InputWord x = embed_set_equality({7}, {9}, prev, {0}, 2, {});
        CHECK(type_of(x) == TypeProfile({2, 2}));
    }
    SECTION("no chopped rows uses only fresh symbols") {
        InputWord x = embed_set_equality({}, {}, TypeProfile({2, 1}), {}, 1, {4, 5});
        CHECK(type_of(x) == TypeProfile({2, 1}));
    }
    SECTION("promise violations are rejected") {
        CHECK_THROWS_AS(embed_set_equality({7, 8}, {8, 9}, TypeProfile({3, 2}), {0, 1}, 1, {}),
                        std::invalid_argument);
        CHECK_THROWS_AS(embed_set_equality({7}, {9}, prev, {0}, 2, {7}), std::invalid_argument);
        CHECK_THROWS_AS(embed_set_equality({7, 7}, {8, 9}, TypeProfile({3, 2}), {0, 1}, 1, {}),
                        std::invalid_argument);
    }
}
