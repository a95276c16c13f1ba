#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "symq/chopper.hpp"
#include "symq/rng.hpp"

using namespace symq;

TEST_CASE("chop parameters") {
    ChopParams p4 = ChopParams::make(4);
    CHECK(p4.p == 4);
    CHECK(p4.l == 2);
    ChopParams p5 = ChopParams::make(5);
    CHECK(p5.p == 8);
    CHECK(p5.l == 3);
}

TEST_CASE("hand trace: (4) against (1,1,1,1)") {
    HybridSequence seq = chop_sequence(TypeProfile({4}), TypeProfile({1, 1, 1, 1}));
    REQUIRE(seq.profiles.size() == 3);
    CHECK(seq.profiles[0] == TypeProfile({4}));
    CHECK(seq.profiles[1] == TypeProfile({2, 2}));
    CHECK(seq.profiles[2] == TypeProfile({1, 1, 1, 1}));
    CHECK(seq.steps[0].rows_chopped == 1);
    CHECK(seq.steps[0].distance == 2);
    CHECK(seq.steps[1].rows_chopped == 2);
    CHECK(seq.steps[1].distance == 2);
}

TEST_CASE("equal endpoints never chop") {
    TypeProfile a({3, 2, 1});
    HybridSequence seq = chop_sequence(a, a);
    for (const auto& p : seq.profiles) CHECK(p == a);
    for (const auto& s : seq.steps) CHECK(s.rows_chopped == 0);
}

TEST_CASE("collision N=8: strictness blocks the one-to-one side") {
    TypeProfile ones = uniform_profile(8, 1), twos = uniform_profile(4, 2);
    HybridSequence a = chop_sequence(ones, twos);
    CHECK(a.total_rows_chopped() == 0);
    CHECK(a.profiles.back() == ones);
    HybridSequence b = chop_sequence(twos, ones);
    CHECK(b.steps[0].rows_chopped == 0);
    CHECK(b.steps[1].rows_chopped == 0);
    CHECK(b.steps[2].rows_chopped == 4);
    CHECK(b.profiles.back() == ones);
}

TEST_CASE("final configuration formula") {
    CHECK(final_configuration(TypeProfile({4}), TypeProfile({1, 1, 1, 1})) == TypeProfile({1, 1, 1, 1}));
    TypeProfile a({5, 3, 1});
    CHECK(final_configuration(a, a) == a);
    CHECK(final_configuration(uniform_profile(4, 2), uniform_profile(8, 1)) == uniform_profile(8, 1));
}

TEST_CASE("random pairs meet at the final configuration") {
    Rng rng(404);
    for (int n : {4, 8, 16, 32}) {
        for (int rep = 0; rep < 200; ++rep) {
            auto random_profile = [&]() {
                std::vector<int> entries(static_cast<size_t>(n));
                for (auto& e : entries) e = static_cast<int>(rng.uniform_int(1, n));
                return type_of(InputWord(entries, n));
            };
            TypeProfile a = random_profile(), b = random_profile();
            TypeProfile fin = final_configuration(a, b);
            HybridSequence sa = chop_sequence(a, b), sb = chop_sequence(b, a);
            CHECK(sa.profiles.back() == fin);
            CHECK(sb.profiles.back() == fin);
            long long total = 0;
            long long prev = profile_distance(a, fin);
            for (const auto& st : sa.steps) {
                CHECK(st.distance == st.rows_chopped * st.chop_size);
                std::set<int> uniq(st.chopped_row_indices.begin(), st.chopped_row_indices.end());
                CHECK(static_cast<long long>(uniq.size()) == st.rows_chopped);
                total += st.rows_chopped;
            }
            CHECK(total <= n - 1);
            for (size_t ell = 1; ell < sa.profiles.size(); ++ell) {
                long long d = profile_distance(sa.profiles[ell], fin);
                CHECK(d <= prev);
                prev = d;
            }
        }
    }
}

TEST_CASE("chopub check") {
    CExp c(2, 7);
    SECTION("no level qualifies below T = 8") {
        HybridSequence seq = chop_sequence(TypeProfile({4}), TypeProfile({1, 1, 1, 1}));
        for (const auto& e : chopub_check(seq, 7, c)) CHECK(!e.qualifies);
    }
    SECTION("collision hard core passes") {
        SymmetricFunction f = collision_function(64, 64);
        HardCore core = find_hard_core(f, c);
        HybridSequence seq = chop_sequence(core.zero_type, core.one_type);
        for (const auto& e : chopub_check(seq, core.t, c))
            if (e.qualifies) CHECK(e.ok);
    }
    SECTION("a forced violation is reported") {
        HybridSequence seq;
        seq.params = ChopParams::make(64);
        ChopStep step;
        step.level = 1;
        step.chop_size = 32;
        step.rows_chopped = 2;
        step.distance = 64;  // > 8N/T^c = 512/64^{2/7} ~ 156? use T big enough
        seq.steps.push_back(step);
        auto rep = chopub_check(seq, 4096, c);  // 8N/T^c = 512/10.77 ~ 47.5 < 64
        REQUIRE(rep.size() == 1);
        CHECK(rep[0].qualifies);
        CHECK(!rep[0].ok);
    }
}

TEST_CASE("bias schedule stays below one sixth") {
    auto betas = bias_schedule(64);
    CHECK(betas[0] == 0.1);
    double sum = 0.0;
    for (double b : betas) {
        sum += b;
        CHECK(sum < 1.0 / 6.0);
    }
}

TEST_CASE("bound profile") {
    HybridSequence seq = chop_sequence(TypeProfile({4}), TypeProfile({1, 1, 1, 1}));
    auto rows = bound_profile(seq, 16, CExp(2, 7));
    REQUIRE(rows.size() == 2);  // both levels chop
    CHECK(rows[0].level == 1);
    CHECK(rows[0].sqrt_n_over_d == Catch::Approx(std::sqrt(2.0)));
    CHECK(rows[0].beta == Catch::Approx(0.1));
    // levels with no chops are omitted
    HybridSequence nochop = chop_sequence(uniform_profile(8, 1), uniform_profile(4, 2));
    CHECK(bound_profile(nochop, 16, CExp(2, 7)).empty());
}

TEST_CASE("branch crossover sits near the balancing row count") {
    // max( sqrt(2^l / r), (r/log2 r)^{1/5} ) is minimized near r = 2^{5l/7} l^{2/7}
    for (int ell : {10, 14}) {
        double best = 1e18;
        long long argbest = 1;
        for (long long r = 1; r <= (1LL << ell); ++r) {
            double a = std::sqrt(std::pow(2.0, ell) / static_cast<double>(r));
            double b = r <= 2 ? std::pow(static_cast<double>(r), 0.2)
                              : std::pow(r / std::log2(static_cast<double>(r)), 0.2);
            double v = std::max(a, b);
            if (v < best) {
                best = v;
                argbest = r;
            }
        }
        double predicted = std::pow(2.0, 5.0 * ell / 7.0) * std::pow(static_cast<double>(ell), 2.0 / 7.0);
        CHECK(argbest >= predicted / 8.0);
        CHECK(argbest <= predicted * 8.0);
    }
}
