#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "symq/estimator.hpp"

using namespace symq;

TEST_CASE("sample count formula") {
    // independent evaluation of ceil(24 T^{1+c} ln T)
    auto oracle = [](long long t, double c) {
        return static_cast<unsigned long long>(
            std::ceil(24.0L * std::pow(static_cast<long double>(t), 1.0L + c) *
                      std::log(static_cast<long double>(t))));
    };
    CHECK(EstimatorParams(8, CExp(2, 7)).u() == 724);
    CHECK(EstimatorParams(8, CExp(2, 7)).u() == oracle(8, 2.0 / 7.0));
    CHECK(EstimatorParams(16, CExp(2, 7)).u() == oracle(16, 2.0 / 7.0));
    CHECK(EstimatorParams(64, CExp(2, 7)).u() == oracle(64, 2.0 / 7.0));
    CHECK_THROWS_AS(EstimatorParams(1, CExp(2, 7)), std::invalid_argument);
}

TEST_CASE("sampler on a constant word is exact") {
    InputWord word(std::vector<int>(32, 1), 4);
    EstimatorParams params(8, CExp(2, 7));
    Rng rng(5);
    MultiplicityEstimate est = run_sampler(word, params, rng);
    CHECK(est.sample_counts[0] == static_cast<long long>(params.u()));
    CHECK(est.sample_counts[1] == 0);
    auto values = est.values();
    CHECK(values[0] == Frac(32));
    CHECK(values[1] == Frac(0));
}

TEST_CASE("estimates sum to N exactly") {
    InputWord word({1, 2, 2, 3, 3, 3, 7, 7}, 8);
    EstimatorParams params(4, CExp(2, 7));
    for (uint64_t seed : {1u, 2u, 3u}) {
        Rng rng(seed);
        MultiplicityEstimate est = run_sampler(word, params, rng);
        Frac total(0);
        for (const Frac& v : est.values()) total = total + v;
        CHECK(total == Frac(word.n()));
    }
}

TEST_CASE("separation_holds") {
    CExp c(2, 7);
    TypeProfile a({64}), b({32, 32});
    CHECK(!separation_holds(a, a, 64, c));
    CHECK(separation_holds(a, b, 64, c));  // row 1: 32 > 2 + 96/64^{2/7} ~ 31.26
    // collision at N=16, T=16: every row gap is 1 and 2N/T = 2 already
    CHECK(!separation_holds(uniform_profile(16, 1), uniform_profile(8, 2), 16, c));
}

TEST_CASE("separation agrees with floating-point evaluation away from ties") {
    CExp c(2, 7);
    Rng rng(17);
    for (int rep = 0; rep < 300; ++rep) {
        int n = static_cast<int>(rng.uniform_int(2, 40));
        std::vector<int> ea(static_cast<size_t>(n)), eb(static_cast<size_t>(n));
        for (auto& e : ea) e = static_cast<int>(rng.uniform_int(1, n));
        for (auto& e : eb) e = static_cast<int>(rng.uniform_int(1, n));
        TypeProfile a = type_of(InputWord(ea, n)), b = type_of(InputWord(eb, n));
        long long t = rng.uniform_int(2, 3 * n);
        bool expected = false;
        double tc = std::pow(static_cast<double>(t), 2.0 / 7.0);
        size_t len = std::max(a.parts.size(), b.parts.size());
        double closest = 1e9;
        for (size_t i = 0; i < len; ++i) {
            double lhs = std::abs(a.at(i) - b.at(i));
            double rhs = 2.0 * n / t + (a.at(i) + b.at(i)) / tc;
            closest = std::min(closest, std::abs(lhs - rhs));
            if (lhs > rhs) expected = true;
        }
        if (closest < 1e-9) continue;  // too close for the float oracle to call
        CHECK(separation_holds(a, b, t, c) == expected);
    }
}

TEST_CASE("decide is exact when the estimate is exact") {
    SymmetricFunction f(16, 4, {TypeProfile({16})}, {});
    InputWord word(std::vector<int>(16, 2), 4);
    for (long long t : {2, 5, 16}) {
        Rng rng(9);
        CHECK(decide(f, word, EstimatorParams(t, CExp(2, 7)), rng) == 1);
    }
}

TEST_CASE("decide is deterministic in the seed") {
    SymmetricFunction f = balanced_function(32);
    InputWord word = InputWord(std::vector<int>(32, 1), 2);
    EstimatorParams params(8, CExp(2, 7));
    Rng r1(123), r2(123);
    CHECK(decide(f, word, params, r1) == decide(f, word, params, r2));
}

TEST_CASE("find_hard_core on collision stops at the scan cap") {
    CExp c(2, 7);
    SymmetricFunction f = collision_function(16, 16);
    HardCore core = find_hard_core(f, c);
    // exhaustive downward-scan oracle
    long long expected = 0;
    for (long long t = 3 * 16; t >= 2; --t) {
        if (abbound_holds(f.ones[0], f.zeros[0], t, c)) {
            expected = t;
            break;
        }
    }
    CHECK(core.t == expected);
    CHECK(core.t == 48);  // unit row gaps always satisfy the cap inequality
    CHECK(core.one_type == uniform_profile(16, 1));
    CHECK(core.zero_type == uniform_profile(8, 2));
}

TEST_CASE("hard core inequality holds at the returned T") {
    CExp c(2, 7);
    int n = 12;
    SymmetricFunction f(n, n, {TypeProfile({n})}, {uniform_profile(n, 1)});
    HardCore core = find_hard_core(f, c);
    CHECK(abbound_holds(core.one_type, core.zero_type, core.t, c));
    // row 1 reads N-1 <= 3N/T + (N+1)/T^c
    double lhs = n - 1.0;
    double rhs = 3.0 * n / core.t + (n + 1.0) / std::pow(static_cast<double>(core.t), 2.0 / 7.0);
    CHECK(lhs <= rhs + 1e-9);
    // and T+1 has no satisfying pair unless the scan stopped at the cap
    if (core.t < 3 * n) CHECK(!abbound_holds(core.one_type, core.zero_type, core.t + 1, c));
}

TEST_CASE("find_hard_core requires both type classes") {
    SymmetricFunction constant(4, 4, {TypeProfile({4})}, {});
    CHECK_THROWS_AS(find_hard_core(constant, CExp(2, 7)), std::invalid_argument);
}

TEST_CASE("band_z_range agrees with the exact predicate") {
    CExp c(2, 7);
    const long long n = 64, t = 8;
    EstimatorParams params(t, c);
    unsigned long long u = params.u();
    for (long long a : {0, 1, 2, 5, 32, 64}) {
        ZBand band = band_z_range(n, u, a, t, c);
        for (long long z = std::max(0LL, band.lo - 3); z <= band.hi + 3 && z <= static_cast<long long>(u); ++z) {
            bool inside = within_one_type_band(n * z, static_cast<long long>(u), a, n, t, c);
            CHECK(inside == (z >= band.lo && z <= band.hi));
        }
    }
}

TEST_CASE("sampler tail event is rare at small scale") {
    // 300-trial miniature of the tail check: N = 64 two-to-one, T = 8
    const int n = 64;
    std::vector<int> entries;
    for (int s = 1; s <= n / 2; ++s) {
        entries.push_back(s);
        entries.push_back(s);
    }
    InputWord word(entries, n);
    EstimatorParams params(8, CExp(2, 7));
    ZBand band = band_z_range(n, params.u(), 2, 8, CExp(2, 7));
    int bad = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Rng rng = Rng::stream(2024, static_cast<uint64_t>(trial));
        MultiplicityEstimate est = run_sampler(word, params, rng);
        for (int sym = 0; sym < n / 2; ++sym) {
            if (est.sample_counts[sym] < band.lo || est.sample_counts[sym] > band.hi) {
                ++bad;
                break;
            }
        }
    }
    CHECK(bad <= 300 * 5 / 8);
}
