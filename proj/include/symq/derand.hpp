#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symq/polynomial.hpp"
#include "symq/rng.hpp"

namespace symq {

/// Parameters of the influential-variable simulation. The conjectured
/// influence polynomial q is instantiated as q(t) = t^k.
struct SimulationParams {
    double epsilon = 0.2;
    double delta = 0.2;
    int k = 3;
    int max_rounds = 0;  // 0 -> defaults to N at run time

    void validate() const {
        if (!(epsilon > 0 && epsilon < 1) || !(delta > 0 && delta < 1))
            throw std::invalid_argument("SimulationParams: epsilon and delta must lie in (0,1)");
        if (k < 1) throw std::invalid_argument("SimulationParams: threshold exponent must be positive");
        if (max_rounds < 0) throw std::invalid_argument("SimulationParams: negative round cap");
    }
};

enum class Halt { VarianceThreshold, RoundCap, InfluenceShortfall };

inline std::string halt_name(Halt h) {
    switch (h) {
        case Halt::VarianceThreshold: return "variance-threshold";
        case Halt::RoundCap: return "round-cap";
        case Halt::InfluenceShortfall: return "influence-shortfall";
    }
    return "?";
}

struct RoundRecord {
    int variable = -1;        // original variable index queried
    int observed = 0;         // revealed bit
    double variance = 0.0;    // Vr[p_j] before the query
    double max_influence = 0.0;
    bool influence_met = false;  // max influence exceeded (eps*delta/T)^k
};

struct RestrictionTrace {
    std::vector<RoundRecord> rounds;
    double estimate = 0.0;
    Halt halted_by = Halt::VarianceThreshold;
    double threshold = 0.0;      // (eps*delta/T)^k
    double initial_sum_influence = 0.0;

    int queries() const { return static_cast<int>(rounds.size()); }
    bool all_influences_met() const {
        for (const auto& r : rounds)
            if (!r.influence_met) return false;
        return true;
    }
};

/// The restriction loop: while Vr[p_j] > eps*delta, query the most
/// influential variable of p_j and restrict. Influence shortfall is recorded
/// but does not abort, since correctness only needs the variance exit; a
/// hard round cap guarantees termination regardless.
inline std::pair<double, RestrictionTrace> classical_simulate(const BoundedPolynomial& p, uint32_t x,
                                                              const SimulationParams& params,
                                                              long long t) {
    params.validate();
    if (t < 1) throw std::invalid_argument("classical_simulate: query count T must be positive");
    const int cap = params.max_rounds > 0 ? params.max_rounds : p.n;
    RestrictionTrace trace;
    trace.threshold = std::pow(params.epsilon * params.delta / static_cast<double>(t), params.k);
    trace.initial_sum_influence = sum_influence(p);

    BoundedPolynomial cur = p;
    std::vector<int> live(p.n);  // restricted index -> original variable
    for (int i = 0; i < p.n; ++i) live[i] = i;

    while (true) {
        double vr = variance_l1(cur);
        if (vr <= params.epsilon * params.delta || cur.n == 0) {
            trace.estimate = mean_value(cur);
            trace.halted_by = Halt::VarianceThreshold;
            break;
        }
        if (trace.queries() >= cap) {
            trace.estimate = mean_value(cur);
            trace.halted_by = Halt::RoundCap;
            break;
        }
        auto inf = influences(cur);
        int best = 0;
        for (int i = 1; i < cur.n; ++i)
            if (inf[i] > inf[best]) best = i;  // ties break to the lowest index
        RoundRecord rec;
        rec.variable = live[best];
        rec.variance = vr;
        rec.max_influence = inf[best];
        rec.influence_met = inf[best] > trace.threshold;
        rec.observed = static_cast<int>((x >> rec.variable) & 1);
        trace.rounds.push_back(rec);
        cur = restrict(cur, best, rec.observed);
        live.erase(live.begin() + best);
    }
    return {trace.estimate, trace};
}

struct AgreementReport {
    double agreement = 0.0;       // fraction of defined inputs answered correctly
    double failure_fraction = 0.0;  // fraction with |estimate - p| > epsilon
    long long defined_inputs = 0;
    std::vector<int> halt_histogram = std::vector<int>(3, 0);
};

/// Boolean rounding: simulate every input, threshold the
/// estimate at 1/2, compare against the target table (entries outside {0,1}
/// mean undefined and are skipped for agreement).
inline AgreementReport boolean_round(const BoundedPolynomial& p, const std::vector<int>& target,
                                     const SimulationParams& params, long long t) {
    if (target.size() != p.cube())
        throw std::invalid_argument("boolean_round: target table has wrong size");
    AgreementReport rep;
    long long agree = 0, fail = 0;
    for (uint32_t x = 0; x < p.cube(); ++x) {
        auto [estimate, trace] = classical_simulate(p, x, params, t);
        ++rep.halt_histogram[static_cast<int>(trace.halted_by)];
        if (std::abs(estimate - p.values[x]) > params.epsilon) ++fail;
        if (target[x] == 0 || target[x] == 1) {
            ++rep.defined_inputs;
            int rounded = estimate >= 0.5 ? 1 : 0;
            if (rounded == target[x]) ++agree;
        }
    }
    rep.failure_fraction = static_cast<double>(fail) / static_cast<double>(p.cube());
    rep.agreement = rep.defined_inputs ? static_cast<double>(agree) / static_cast<double>(rep.defined_inputs) : 1.0;
    return rep;
}

struct JuntaResult {
    uint32_t support = 0;         // variable subset as bitmask
    BoundedPolynomial junta;      // same N, depends only on the support
    double l2_error = 0.0;        // E[(junta - p)^2]
};

/// The L2-optimal junta on a fixed variable set: the conditional expectation
/// of p over the variables outside S.
inline JuntaResult best_junta(const BoundedPolynomial& p, uint32_t support) {
    if (p.n < 32 && (support >> p.n) != 0)
        throw std::invalid_argument("best_junta: support contains unknown variables");
    const size_t cube = p.cube();
    std::vector<double> sums(cube, 0.0);
    std::vector<long long> counts(cube, 0);
    for (size_t x = 0; x < cube; ++x) {
        size_t key = x & support;
        sums[key] += p.values[x];
        ++counts[key];
    }
    JuntaResult res;
    res.support = support;
    std::vector<double> values(cube);
    for (size_t x = 0; x < cube; ++x) {
        size_t key = x & support;
        values[x] = sums[key] / static_cast<double>(counts[key]);
    }
    res.junta = BoundedPolynomial::from_values(p.n, std::move(values));
    double err = 0.0;
    for (size_t x = 0; x < cube; ++x) {
        double d = res.junta.values[x] - p.values[x];
        err += d * d;
    }
    res.l2_error = err / static_cast<double>(cube);
    return res;
}

/// Exhaustive minimization of the junta error over all size-K supports.
inline JuntaResult junta_search(const BoundedPolynomial& p, int k) {
    if (k < 0 || k > p.n) throw std::invalid_argument("junta_search: bad support size");
    double binom = 1.0;
    for (int i = 0; i < k; ++i) binom = binom * (p.n - i) / (i + 1);
    if (binom > 1e6) throw std::length_error("junta_search: combinatorial budget exceeded");
    std::optional<JuntaResult> best;
    for (uint32_t mask = 0; mask < (uint32_t{1} << p.n); ++mask) {
        if (std::popcount(mask) != k) continue;
        JuntaResult cand = best_junta(p, mask);
        if (!best || cand.l2_error < best->l2_error) best = std::move(cand);
    }
    return *best;
}

struct MarkovReport {
    bool condition_holds = false;  // l2 error <= alpha^2 delta^2
    double l2_error = 0.0;
    double bad_fraction = 0.0;  // fraction of inputs with |junta - p| > alpha
    bool pass = true;           // condition implies bad_fraction < delta
};

inline MarkovReport markov_check(const BoundedPolynomial& p, const JuntaResult& junta, double alpha,
                                 double delta) {
    MarkovReport rep;
    rep.l2_error = junta.l2_error;
    rep.condition_holds = junta.l2_error <= alpha * alpha * delta * delta;
    long long bad = 0;
    for (size_t x = 0; x < p.cube(); ++x)
        if (std::abs(junta.junta.values[x] - p.values[x]) > alpha) ++bad;
    rep.bad_fraction = static_cast<double>(bad) / static_cast<double>(p.cube());
    rep.pass = !rep.condition_holds || rep.bad_fraction < delta;
    return rep;
}

struct ProbeReport {
    double max_influence = 0.0;
    int argmax = -1;
    double vr = 0.0;
    double ratios[3] = {0.0, 0.0, 0.0};  // max_inf / (Vr/d)^k for k = 1,2,3
    bool vacuous = false;                // Vr = 0
    bool flagged = false;                // some ratio fell below the floor
};

/// Influence probe for the bounded-polynomial conjecture: reports the
/// largest influence against powers of Vr/d and flags candidates for review.
/// Never asserts anything about the conjecture itself.
inline ProbeReport conjecture_probe(const BoundedPolynomial& p, int d, double floor = 1.0) {
    if (p.min_value() < -1e-9 || p.max_value() > 1.0 + 1e-9)
        throw std::invalid_argument("conjecture_probe: polynomial leaves [0,1] on the cube");
    if (d < 1) d = std::max(1, p.degree());
    ProbeReport rep;
    auto inf = influences(p);
    for (int i = 0; i < p.n; ++i) {
        if (inf[i] > rep.max_influence) {
            rep.max_influence = inf[i];
            rep.argmax = i;
        }
    }
    rep.vr = variance_l1(p);
    if (rep.vr <= 0.0) {
        rep.vacuous = true;
        return rep;
    }
    double base = rep.vr / static_cast<double>(d);
    for (int k = 1; k <= 3; ++k) {
        rep.ratios[k - 1] = rep.max_influence / std::pow(base, k);
        if (rep.ratios[k - 1] < floor) rep.flagged = true;
    }
    return rep;
}

}  // namespace symq
