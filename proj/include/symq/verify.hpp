#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "symq/adversary.hpp"
#include "symq/boolean_symmetric.hpp"
#include "symq/chopper.hpp"
#include "symq/derand.hpp"
#include "symq/estimator.hpp"
#include "symq/qsim.hpp"
#include "symq/types.hpp"

namespace symq::verify {

struct Options {
    bool fast = false;
    uint64_t seed = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline TypeProfile random_profile(int n, Rng& rng) {
    std::vector<int> entries(static_cast<size_t>(n));
    for (auto& e : entries) e = static_cast<int>(rng.uniform_int(1, n));
    return type_of(InputWord(entries, n));
}

inline InputWord two_to_one_word(int n) {
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n));
    for (int s = 1; s <= n / 2; ++s) {
        entries.push_back(s);
        entries.push_back(s);
    }
    return InputWord(entries, n);
}

inline InputWord constant_word(int n, int m, int symbol = 1) {
    return InputWord(std::vector<int>(static_cast<size_t>(n), symbol), m);
}

inline InputWord balanced_word(int n) {
    std::vector<int> entries(static_cast<size_t>(n), 1);
    for (int i = n / 2; i < n; ++i) entries[static_cast<size_t>(i)] = 2;
    return InputWord(entries, 2);
}

}  // namespace detail

/// 1. Chopping correctness on random profile pairs.
inline CriterionResult criterion_chop_correctness(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{1, "chopping-correctness", false, "", 0.0};
    const std::vector<int> ns = opt.fast ? std::vector<int>{4, 8, 16, 32} : std::vector<int>{4, 8, 16, 32, 64};
    const int pairs = opt.fast ? 200 : 1000;
    long long checked = 0, violations = 0;
    for (int n : ns) {
        Rng rng = Rng::stream(opt.seed, 1000 + static_cast<uint64_t>(n));
        for (int rep = 0; rep < pairs; ++rep) {
            TypeProfile a = detail::random_profile(n, rng);
            TypeProfile b = detail::random_profile(n, rng);
            TypeProfile fin = final_configuration(a, b);
            HybridSequence sa = chop_sequence(a, b);
            HybridSequence sb = chop_sequence(b, a);
            ++checked;
            bool ok = sa.profiles.back() == fin && sb.profiles.back() == fin;
            long long total = 0;
            long long prev_dist = profile_distance(a, fin);
            for (const auto& step : sa.steps) {
                ok = ok && step.distance == step.rows_chopped * step.chop_size;
                std::set<int> uniq(step.chopped_row_indices.begin(), step.chopped_row_indices.end());
                ok = ok && static_cast<long long>(uniq.size()) == step.rows_chopped;
                total += step.rows_chopped;
            }
            ok = ok && total <= n - 1;
            for (size_t ell = 1; ell < sa.profiles.size(); ++ell) {
                long long d = profile_distance(sa.profiles[ell], fin);
                ok = ok && d <= prev_dist;
                prev_dist = d;
            }
            if (!ok) ++violations;
        }
    }
    res.seconds = timer.seconds();
    bool in_time = res.seconds < 60.0;
    res.pass = violations == 0 && in_time;
    std::ostringstream os;
    os << checked << " random pairs, " << violations << " violations"
       << (in_time ? "" : ", over the 60s budget");
    res.detail = os.str();
    return res;
}

/// 2. Level-distance bound on hard cores of the collision and
/// all-equal-vs-balanced families.
inline CriterionResult criterion_chopub(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{2, "chopub-hard-cores", false, "", 0.0};
    const CExp c(2, 7);
    const std::vector<int> ns = opt.fast ? std::vector<int>{4, 8, 16} : std::vector<int>{4, 8, 16, 32, 64};
    long long qualifying = 0, violations = 0;
    for (int n : ns) {
        for (int fam = 0; fam < 2; ++fam) {
            SymmetricFunction f = fam == 0 ? collision_function(n, n) : balanced_function(n);
            HardCore hc = find_hard_core(f, c);
            if (!abbound_holds(hc.one_type, hc.zero_type, hc.t, c)) {
                ++violations;
                continue;
            }
            for (const auto& seq :
                 {chop_sequence(hc.one_type, hc.zero_type), chop_sequence(hc.zero_type, hc.one_type)}) {
                for (const auto& e : chopub_check(seq, hc.t, c)) {
                    if (!e.qualifies) continue;
                    ++qualifying;
                    if (!e.ok) ++violations;
                }
            }
        }
    }
    res.seconds = timer.seconds();
    res.pass = violations == 0;
    std::ostringstream os;
    os << qualifying << " qualifying levels, " << violations << " violations";
    res.detail = os.str();
    return res;
}

/// 3. Sampler tail bound: bad-event frequency at most 5/T with 95% binomial
/// confidence, N = 1024 two-to-one input.
inline CriterionResult criterion_sampling(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{3, "sampling-tail", false, "", 0.0};
    const CExp c(2, 7);
    const int n = 1024;
    const InputWord word = detail::two_to_one_word(n);
    const std::vector<long long> ts = opt.fast ? std::vector<long long>{8, 16} : std::vector<long long>{8, 16, 32};
    const int trials = opt.fast ? 600 : 2000;
    bool all_ok = true;
    std::ostringstream os;
    for (long long t : ts) {
        EstimatorParams params(t, c);
        ZBand band = band_z_range(n, params.u(), 2, t, c);
        long long bad = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = Rng::stream(opt.seed, 3000 + static_cast<uint64_t>(t) * 100000 + trial);
            MultiplicityEstimate est = run_sampler(word, params, rng);
            bool bad_event = false;
            for (int sym = 0; sym < n / 2 && !bad_event; ++sym) {
                long long z = est.sample_counts[sym];
                bad_event = z < band.lo || z > band.hi;
            }
            if (bad_event) ++bad;
        }
        double target = 5.0 / static_cast<double>(t);
        double limit = trials * target + 1.645 * std::sqrt(trials * target * (1.0 - target));
        bool ok = static_cast<double>(bad) <= limit;
        all_ok = all_ok && ok;
        os << "T=" << t << ": " << bad << "/" << trials << " bad (limit " << limit << ") ";
    }
    res.seconds = timer.seconds();
    res.pass = all_ok;
    res.detail = os.str();
    return res;
}

/// 4. Decision algorithm error rate on all-equal-vs-balanced at N = 64 with
/// the smallest T satisfying the separation condition.
inline CriterionResult criterion_rworks(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{4, "rworks-error-rate", false, "", 0.0};
    const CExp c(2, 7);
    const int n = 64;
    SymmetricFunction f = balanced_function(n);
    long long t_run = 0;
    for (long long t = 2; t <= 3 * n; ++t) {
        if (separation_holds(f.ones[0], f.zeros[0], t, c)) {
            t_run = t;
            break;
        }
    }
    if (t_run == 0) {
        res.detail = "no T with separation";
        res.seconds = timer.seconds();
        return res;
    }
    EstimatorParams params(t_run, c);
    const int trials = opt.fast ? 150 : 500;
    InputWord one_word = detail::constant_word(n, 2);
    InputWord zero_word = detail::balanced_word(n);
    long long errors = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::stream(opt.seed, 4000 + trial);
        bool use_one = trial % 2 == 0;
        int truth = use_one ? 1 : 0;
        int got = decide(f, use_one ? one_word : zero_word, params, rng);
        if (got != truth) ++errors;
    }
    double rate = static_cast<double>(errors) / trials;
    res.seconds = timer.seconds();
    res.pass = rate <= 1.0 / 3.0 + 0.05;
    std::ostringstream os;
    os << "T=" << t_run << " error rate " << rate << " over " << trials << " trials";
    res.detail = os.str();
    return res;
}

/// 5. Adversary bound equals the weight-relation closed form.
inline CriterionResult criterion_adversary_identities(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{5, "adversary-identities", false, "", 0.0};
    const int nmax = opt.fast ? 6 : 8;
    long long checked = 0, violations = 0;
    double worst = 0.0;
    for (int n = 1; n <= nmax; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                AdversaryBound got = adversary_bound(weight_relation(n, a, b));
                double expect = std::sqrt(static_cast<double>(n - a) * b) / static_cast<double>(b - a);
                ++checked;
                double err = std::abs(got.bound - expect);
                worst = std::max(worst, err);
                if (err > 1e-9) ++violations;
                if (a == 0 && b == 1 && got.bound != std::sqrt(static_cast<double>(n))) ++violations;
            }
        }
    }
    res.seconds = timer.seconds();
    res.pass = violations == 0;
    std::ostringstream os;
    os << checked << " (N,a,b) instances, worst error " << worst;
    res.detail = os.str();
    return res;
}

/// The chop relations the acceptance harness enumerates in full: every move
/// the chopping procedure makes on the collision and all-equal-vs-balanced
/// families at N in {4, 6, 8} that fits the pair budget, plus a
/// mixed-multiplicity stress instance.
inline std::vector<ChopInstance> enumerable_chop_instances(bool fast) {
    std::vector<ChopInstance> out = {
        {TypeProfile({4}), {0}, 2, 3},           // balanced N=4, level 1
        {TypeProfile({2, 2}), {1}, 1, 4},        // balanced N=4, level 2
        {TypeProfile({2, 2}), {0, 1}, 1, 4},     // collision N=4
        {TypeProfile({8}), {0}, 4, 3},           // balanced N=8, level 1
        {TypeProfile({2, 2, 1, 1}), {0}, 1, 5},  // mixed multiplicities, d=1
    };
    if (!fast) {
        out.push_back({TypeProfile({4, 4}), {1}, 2, 3});           // balanced N=8, level 2
        out.push_back({TypeProfile({2, 2, 2}), {0, 1, 2}, 1, 6});  // collision N=6
        out.push_back({TypeProfile({2, 2, 2, 2}), {0}, 1, 5});     // N=8 single-row move
    }
    return out;
}

/// 6. Chop-relation product bound, exactly, on the enumerable instances.
inline CriterionResult criterion_chop_relation_bound(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{6, "chop-relation-bound", false, "", 0.0};
    long long violations = 0;
    std::ostringstream os;
    for (const auto& inst : enumerable_chop_instances(opt.fast)) {
        InputRelation rel = chop_relation(inst);
        AdversaryBound ab = adversary_bound(rel);
        long long n = inst.prev.n(), d = inst.d();
        // alpha <= d/(n-d) exactly
        bool ok = static_cast<__int128>(ab.alpha.num) * (n - d) <= static_cast<__int128>(ab.alpha.den) * d;
        if (!ok) ++violations;
        os << inst.prev.str() << "->" << inst.next().str() << " alpha=" << ab.alpha.str() << " ";
    }
    res.seconds = timer.seconds();
    res.pass = violations == 0;
    res.detail = os.str() + (violations ? "VIOLATIONS" : "all within d/(N-d)");
    return res;
}

/// 7. Set Equality embedding, exhaustively over a 6-symbol pool at r <= 2.
inline CriterionResult criterion_embedding(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{7, "set-equality-embedding", false, "", 0.0};
    (void)opt;
    long long checked = 0, violations = 0;
    struct Case {
        TypeProfile prev;
        std::vector<int> rows;
        long long chop;
        std::vector<int> fresh;
    };
    std::vector<Case> cases = {
        {TypeProfile({4}), {0}, 2, {}},
        {TypeProfile({3, 2}), {0, 1}, 1, {}},
        {TypeProfile({4, 2, 1}), {0}, 2, {7, 8}},
        {TypeProfile({3, 3, 1}), {0, 1}, 1, {7}},
    };
    const std::vector<int> pool = {1, 2, 3, 4, 5, 6};
    for (const auto& cs : cases) {
        const int r = static_cast<int>(cs.rows.size());
        ChopInstance inst{cs.prev, cs.rows, cs.chop, 32};
        TypeProfile next = inst.next();
        // all repeat-free r-tuples from the pool
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        auto gen = [&](auto&& self) -> void {
            if (static_cast<int>(cur.size()) == r) {
                tuples.push_back(cur);
                return;
            }
            for (int v : pool) {
                if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
                cur.push_back(v);
                self(self);
                cur.pop_back();
            }
        };
        gen(gen);
        for (const auto& y : tuples) {
            for (const auto& z : tuples) {
                std::set<int> ys(y.begin(), y.end()), zs(z.begin(), z.end());
                bool equal = ys == zs;
                bool disjoint = true;
                for (int v : ys)
                    if (zs.count(v)) disjoint = false;
                if (!equal && !disjoint) continue;
                InputWord x = embed_set_equality(y, z, cs.prev, cs.rows, cs.chop, cs.fresh);
                TypeProfile got = type_of(x);
                ++checked;
                if (equal && got != cs.prev) ++violations;
                if (!equal && got != next) ++violations;
            }
        }
    }
    res.seconds = timer.seconds();
    res.pass = violations == 0;
    std::ostringstream os;
    os << checked << " (Y,Z) embeddings, " << violations << " type mismatches";
    res.detail = os.str();
    return res;
}

/// 8. Random-circuit battery: degree, total influence, state sensitivity,
/// bounded values.
inline CriterionResult criterion_qsim_battery(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{8, "qsim-battery", false, "", 0.0};
    const std::vector<int> ns = opt.fast ? std::vector<int>{4, 6} : std::vector<int>{4, 6, 8};
    const std::vector<int> ts = opt.fast ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3};
    const int circuits = opt.fast ? 60 : 200;
    const int w = 4;
    long long degree_bad = 0, suminf_bad = 0, sens_bad = 0, value_bad = 0, total = 0;
    double worst_sens_excess = 0.0, worst_suminf_margin = 1e9;
    for (int n : ns) {
        for (int t : ts) {
            for (int rep = 0; rep < circuits; ++rep) {
                Rng rng = Rng::stream(opt.seed,
                                      8000 + static_cast<uint64_t>(n) * 1000000 +
                                          static_cast<uint64_t>(t) * 10000 + rep);
                QueryCircuit circ = random_circuit(n, t, w, rng);
                BoundedPolynomial p = extract_polynomial(circ);
                ++total;
                if (p.max_coeff_above_degree(2 * t) > 1e-8) ++degree_bad;
                double si = sum_influence(p);
                worst_suminf_margin = std::min(worst_suminf_margin, 4.0 * t - si);
                if (si > 4.0 * t + 1e-6) ++suminf_bad;
                SensitivityReport sens = state_sensitivity(circ);
                worst_sens_excess = std::max(worst_sens_excess, sens.value - sens.reference);
                if (!sens.within) ++sens_bad;
                if (p.min_value() < -1e-9 || p.max_value() > 1.0 + 1e-9) ++value_bad;
            }
        }
    }
    res.seconds = timer.seconds();
    bool in_time = res.seconds < 300.0;
    res.pass = degree_bad == 0 && suminf_bad == 0 && sens_bad == 0 && value_bad == 0 && in_time;
    std::ostringstream os;
    os << total << " circuits (W=" << w << "): degree>2T " << degree_bad << ", SumInf>4T " << suminf_bad
       << " (min margin " << worst_suminf_margin << "), state-sensitivity>2T/N " << sens_bad
       << " (max excess " << worst_sens_excess << "), value-range " << value_bad
       << (in_time ? "" : ", over the 300s budget");
    res.detail = os.str();
    return res;
}

/// 9. Deutsch circuit exactness.
inline CriterionResult criterion_deutsch(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{9, "deutsch-exactness", false, "", 0.0};
    (void)opt;
    QueryCircuit circ = deutsch_circuit();
    circ.validate();
    BoundedPolynomial p = extract_polynomial(circ);
    double e0 = std::abs(p.coeffs[0] - 0.0);
    double e1 = std::abs(p.coeffs[1] - 1.0);
    double e2 = std::abs(p.coeffs[2] - 1.0);
    double e3 = std::abs(p.coeffs[3] + 2.0);
    double i1 = std::abs(influence(p, 0) - 1.0);
    double i2 = std::abs(influence(p, 1) - 1.0);
    double worst = std::max({e0, e1, e2, e3, i1, i2});
    res.seconds = timer.seconds();
    res.pass = worst <= 1e-9;
    std::ostringstream os;
    os << "worst deviation " << worst;
    res.detail = os.str();
    return res;
}

/// 10. Restriction-simulation correctness and query budget on random
/// low-T circuits at N = 6.
inline CriterionResult criterion_impthm(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{10, "impthm-simulation", false, "", 0.0};
    const int n = 6, w = 4;
    const int per_t = opt.fast ? 15 : 50;
    SimulationParams params;
    params.epsilon = 0.2;
    params.delta = 0.2;
    params.k = 3;
    long long polys = 0, violations = 0;
    for (int t : {1, 2}) {
        for (int rep = 0; rep < per_t; ++rep) {
            Rng rng = Rng::stream(opt.seed, 10000 + static_cast<uint64_t>(t) * 1000 + rep);
            BoundedPolynomial p = extract_polynomial(random_circuit(n, t, w, rng));
            ++polys;
            double budget = sum_influence(p) /
                            std::pow(params.epsilon * params.delta / t, params.k);
            long long failures = 0;
            bool all_variance_halts = true;
            bool budget_ok = true;
            for (uint32_t x = 0; x < p.cube(); ++x) {
                auto [estimate, trace] = classical_simulate(p, x, params, t);
                if (trace.queries() > (params.max_rounds > 0 ? params.max_rounds : n)) budget_ok = false;
                if (trace.halted_by != Halt::VarianceThreshold) all_variance_halts = false;
                if (trace.all_influences_met() &&
                    trace.queries() > budget + 1.0) budget_ok = false;
                if (std::abs(estimate - p.values[x]) > params.epsilon) ++failures;
            }
            double failure_fraction = static_cast<double>(failures) / static_cast<double>(p.cube());
            if (all_variance_halts && failure_fraction >= params.delta) ++violations;
            if (!budget_ok) ++violations;
        }
    }
    res.seconds = timer.seconds();
    res.pass = violations == 0;
    std::ostringstream os;
    os << polys << " polynomials, " << violations << " violations";
    res.detail = os.str();
    return res;
}

/// 11. Junta optimality against random same-support juntas plus the Markov
/// consequence.
inline CriterionResult criterion_junta(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{11, "junta-optimality", false, "", 0.0};
    const int n = 6, w = 4, k = 4;
    const int instances = opt.fast ? 10 : 30;
    const int random_juntas = opt.fast ? 40 : 100;
    const double alpha = 0.2, delta = 0.2;
    long long violations = 0;
    for (int rep = 0; rep < instances; ++rep) {
        Rng rng = Rng::stream(opt.seed, 11000 + rep);
        BoundedPolynomial p = extract_polynomial(random_circuit(n, 1, w, rng));
        JuntaResult best = junta_search(p, k);
        // random same-support competitors
        for (int g = 0; g < random_juntas; ++g) {
            std::vector<double> values(p.cube());
            std::vector<double> table(p.cube(), -1.0);
            for (size_t x = 0; x < p.cube(); ++x) {
                size_t key = x & best.support;
                if (table[key] < 0.0) table[key] = rng.uniform();
                values[x] = table[key];
            }
            double err = 0.0;
            for (size_t x = 0; x < p.cube(); ++x) {
                double d = values[x] - p.values[x];
                err += d * d;
            }
            err /= static_cast<double>(p.cube());
            if (best.l2_error > err + 1e-12) ++violations;
        }
        MarkovReport markov = markov_check(p, best, alpha, delta);
        if (!markov.pass) ++violations;
    }
    res.seconds = timer.seconds();
    res.pass = violations == 0;
    std::ostringstream os;
    os << instances << " instances x " << random_juntas << " competitors, " << violations
       << " violations";
    res.detail = os.str();
    return res;
}

/// 12. Appendix identities, exactness on extreme weights, Monte Carlo
/// success rate on the OR-like spec.
inline CriterionResult criterion_appendix(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{12, "appendix-boolean", false, "", 0.0};
    long long violations = 0;
    std::ostringstream os;

    HammingSpec endpoints(16, {{0, 0}, {16, 1}});
    if (std::abs(gamma(endpoints).gamma - 1.0) > 1e-12) ++violations;
    HammingSpec orlike(64, {{0, 0}, {1, 1}});
    if (std::abs(gamma(orlike).gamma - 8.0) > 1e-12) ++violations;

    // exactness on weight-0 / weight-N inputs, random specs plus a spec whose
    // large 1-weight sits next to a defined 0-weight at N
    {
        std::vector<HammingSpec> specs = {endpoints, orlike,
                                          HammingSpec(24, {{0, 0}, {1, 1}, {23, 1}, {24, 0}})};
        Rng rng = Rng::stream(opt.seed, 12001);
        while (specs.size() < (opt.fast ? 24u : 64u)) {
            int n = static_cast<int>(rng.uniform_int(2, 24));
            std::map<int, int> vals;
            vals[0] = static_cast<int>(rng.bit());
            vals[n] = static_cast<int>(rng.bit());
            for (int k = 1; k < n; ++k)
                if (rng.uniform() < 0.3) vals[k] = static_cast<int>(rng.bit());
            HammingSpec s(n, vals);
            if (!s.constant()) specs.push_back(std::move(s));
        }
        for (size_t si = 0; si < specs.size(); ++si) {
            const HammingSpec& s = specs[si];
            for (int weight : {0, s.n}) {
                auto it = s.values.find(weight);
                if (it == s.values.end()) continue;
                std::vector<int> bits(static_cast<size_t>(s.n), weight == 0 ? 0 : 1);
                for (int trial = 0; trial < 5; ++trial) {
                    Rng trng = Rng::stream(opt.seed, 12100 + si * 100 + weight * 10 + trial);
                    if (appendix_decide(s, bits, trng) != it->second) ++violations;
                }
            }
        }
    }

    // Monte Carlo on OR-like at N = 64
    {
        const int trials = opt.fast ? 300 : 1000;
        long long good = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = Rng::stream(opt.seed, 12500 + trial);
            std::vector<int> bits(64, 0);
            int truth = trial % 2;
            if (truth == 1) bits[static_cast<size_t>(rng.uniform_int(0, 63))] = 1;
            if (appendix_decide(orlike, bits, rng) == truth) ++good;
        }
        double rate = static_cast<double>(good) / trials;
        os << "or-like success " << rate << " over " << trials << " trials";
        if (rate < 2.0 / 3.0 - 0.05) ++violations;
    }

    res.seconds = timer.seconds();
    res.pass = violations == 0;
    res.detail = os.str() + (violations ? " VIOLATIONS" : "");
    return res;
}

inline std::vector<CriterionResult> run_all(const Options& opt, bool include_reproducibility);

/// 13. The fast suite runs deterministically end to end under a fixed master
/// seed, in under five minutes, and passes.
inline CriterionResult criterion_reproducibility(const Options& opt) {
    detail::Timer timer;
    CriterionResult res{13, "verify-fast-reproducibility", false, "", 0.0};
    Options fast_opt{true, opt.seed};
    auto first = run_all(fast_opt, false);
    auto second = run_all(fast_opt, false);
    bool deterministic = first.size() == second.size();
    for (size_t i = 0; deterministic && i < first.size(); ++i)
        deterministic = first[i].pass == second[i].pass && first[i].detail == second[i].detail;
    bool all_pass = true;
    std::string first_fail;
    for (const auto& r : first) {
        if (!r.pass && first_fail.empty()) first_fail = r.name;
        all_pass = all_pass && r.pass;
    }
    res.seconds = timer.seconds();
    bool in_time = res.seconds < 300.0;
    res.pass = deterministic && all_pass && in_time;
    std::ostringstream os;
    os << "two fast runs " << (deterministic ? "identical" : "DIVERGED") << ", "
       << (all_pass ? "all criteria passed" : "contains failing criterion: " + first_fail) << ", "
       << res.seconds << "s";
    res.detail = os.str();
    return res;
}

inline std::vector<CriterionResult> run_all(const Options& opt, bool include_reproducibility = true) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_chop_correctness(opt));
    out.push_back(criterion_chopub(opt));
    out.push_back(criterion_sampling(opt));
    out.push_back(criterion_rworks(opt));
    out.push_back(criterion_adversary_identities(opt));
    out.push_back(criterion_chop_relation_bound(opt));
    out.push_back(criterion_embedding(opt));
    out.push_back(criterion_qsim_battery(opt));
    out.push_back(criterion_deutsch(opt));
    out.push_back(criterion_impthm(opt));
    out.push_back(criterion_junta(opt));
    out.push_back(criterion_appendix(opt));
    if (include_reproducibility) out.push_back(criterion_reproducibility(opt));
    return out;
}

}  // namespace symq::verify
