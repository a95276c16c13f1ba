#include <catch2/catch_amalgamated.hpp>

#include "symq/rng.hpp"
#include "symq/types.hpp"

using namespace symq;

TEST_CASE("type_of tallies multiplicities") {
    CHECK(type_of(InputWord({1, 2, 3, 4}, 4)) == TypeProfile({1, 1, 1, 1}));
    CHECK(type_of(InputWord({3, 3, 3}, 3)) == TypeProfile({3}));
    CHECK(type_of(InputWord({5, 2, 5, 2, 7}, 8)) == TypeProfile({2, 2, 1}));
}

TEST_CASE("type_of is invariant under position and symbol permutations") {
    Rng rng(101);
    for (int rep = 0; rep < 200; ++rep) {
        int n = static_cast<int>(rng.uniform_int(1, 8));
        int m = static_cast<int>(rng.uniform_int(1, 8));
        std::vector<int> entries(static_cast<size_t>(n));
        for (auto& e : entries) e = static_cast<int>(rng.uniform_int(1, m));
        InputWord x(entries, m);

        std::vector<int> sigma(static_cast<size_t>(n)), tau(static_cast<size_t>(m));
        for (int i = 0; i < n; ++i) sigma[i] = i;
        for (int i = 0; i < m; ++i) tau[i] = i + 1;
        for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.uniform_int(0, i)]);
        for (int i = m - 1; i > 0; --i) std::swap(tau[i], tau[rng.uniform_int(0, i)]);

        std::vector<int> permuted(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) permuted[i] = tau[static_cast<size_t>(entries[sigma[i]] - 1)];
        CHECK(type_of(InputWord(permuted, m)) == type_of(x));
    }
}

TEST_CASE("multiplicity_counts") {
    CHECK(multiplicity_counts(InputWord({1, 1, 2}, 3)) == std::vector<long long>{2, 1, 0});
    auto counts = multiplicity_counts(InputWord(std::vector<int>(10, 1), 2));
    CHECK(counts == std::vector<long long>{10, 0});
    Rng rng(7);
    std::vector<int> entries{2, 4, 4, 1, 3};
    InputWord w(entries, 4);
    std::vector<int> shuffled = entries;
    for (int i = 4; i > 0; --i) std::swap(shuffled[i], shuffled[rng.uniform_int(0, i)]);
    CHECK(multiplicity_counts(InputWord(shuffled, 4)) == multiplicity_counts(w));
}

TEST_CASE("sort_to_type") {
    CHECK(sort_to_type(RowArray({0, 2, 0, 2, 0, 0, 0, 0}, 4)) == TypeProfile({2, 2}));
    CHECK(sort_to_type(RowArray({0, 0, 5, 0, 0, 0, 0, 0, 0, 0}, 5)) == TypeProfile({5}));
    // padding a profile with zeros and sorting back is the identity
    TypeProfile t({3, 2, 2, 1});
    CHECK(sort_to_type(RowArray::from_profile(t)) == t);
}

TEST_CASE("profile_distance") {
    CHECK(profile_distance(TypeProfile({4}), TypeProfile({1, 1, 1, 1})) == 3);
    CHECK(profile_distance(TypeProfile({3, 2}), TypeProfile({3, 2})) == 0);
    CHECK(profile_distance(uniform_profile(4, 2), uniform_profile(8, 1)) == 4);
    CHECK_THROWS_AS(profile_distance(TypeProfile({2}), TypeProfile({3})), std::invalid_argument);
}

TEST_CASE("profile_distance is a metric") {
    Rng rng(33);
    auto random_profile = [&](int n) {
        std::vector<int> entries(static_cast<size_t>(n));
        for (auto& e : entries) e = static_cast<int>(rng.uniform_int(1, n));
        return type_of(InputWord(entries, n));
    };
    for (int rep = 0; rep < 200; ++rep) {
        int n = static_cast<int>(rng.uniform_int(2, 32));
        TypeProfile a = random_profile(n), b = random_profile(n), c = random_profile(n);
        CHECK(profile_distance(a, b) == profile_distance(b, a));
        CHECK(profile_distance(a, c) <= profile_distance(a, b) + profile_distance(b, c));
        CHECK((profile_distance(a, b) == 0) == (a == b));
    }
}

TEST_CASE("collision_function") {
    SymmetricFunction f = collision_function(4, 4);
    CHECK(f.ones == std::vector<TypeProfile>{TypeProfile({1, 1, 1, 1})});
    CHECK(f.zeros == std::vector<TypeProfile>{TypeProfile({2, 2})});
    SymmetricFunction tiny = collision_function(2, 2);
    CHECK(tiny.value(InputWord({1, 2}, 2)) == 1);
    CHECK(tiny.value(InputWord({2, 2}, 2)) == 0);
    CHECK_THROWS_AS(collision_function(5, 5), std::invalid_argument);
}

TEST_CASE("words evaluate consistently with their type") {
    SymmetricFunction f = collision_function(4, 4);
    CHECK(f.value(InputWord({3, 1, 4, 2}, 4)) == 1);
    CHECK(f.value(InputWord({2, 2, 4, 4}, 4)) == 0);
    CHECK(!f.value(InputWord({1, 1, 1, 2}, 4)).has_value());
}

TEST_CASE("validate_symmetry accepts type-constant maps") {
    std::vector<std::pair<InputWord, int>> words = {
        {InputWord({1, 2}, 2), 1}, {InputWord({2, 1}, 2), 1},
        {InputWord({1, 1}, 2), 0}, {InputWord({2, 2}, 2), 0}};
    SymmetricFunction f = validate_symmetry(words, 2, 2);
    CHECK(f.ones == std::vector<TypeProfile>{TypeProfile({1, 1})});
    CHECK(f.zeros == std::vector<TypeProfile>{TypeProfile({2})});
}

TEST_CASE("validate_symmetry rejects with a witness") {
    std::vector<std::pair<InputWord, int>> words = {{InputWord({1, 2}, 2), 1},
                                                    {InputWord({2, 1}, 2), 0}};
    CHECK_THROWS_AS(validate_symmetry(words, 2, 2), SymmetryViolation);
    try {
        validate_symmetry(words, 2, 2);
    } catch (const SymmetryViolation& v) {
        CHECK(type_of(v.first) == type_of(v.second));
    }
}

TEST_CASE("validate_symmetry accepts the all-equal-vs-balanced map on all 16 words") {
    std::vector<std::pair<InputWord, int>> words;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> entries(4);
        int weight = 0;
        for (int i = 0; i < 4; ++i) {
            entries[i] = ((mask >> i) & 1) + 1;
            weight += (mask >> i) & 1;
        }
        if (weight == 0 || weight == 4)
            words.emplace_back(InputWord(entries, 2), 1);
        else if (weight == 2)
            words.emplace_back(InputWord(entries, 2), 0);
    }
    SymmetricFunction f = validate_symmetry(words, 4, 2);
    CHECK(f.ones == std::vector<TypeProfile>{TypeProfile({4})});
    CHECK(f.zeros == std::vector<TypeProfile>{TypeProfile({2, 2})});
}
