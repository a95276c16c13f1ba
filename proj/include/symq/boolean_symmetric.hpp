#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symq/rational.hpp"
#include "symq/rng.hpp"

namespace symq {

/// A partial symmetric Boolean function of the Hamming weight:
/// values maps weights in {0..N} to {0,1}; missing weights are undefined.
struct HammingSpec {
    int n = 0;
    std::map<int, int> values;

    HammingSpec() = default;
    HammingSpec(int n_, std::map<int, int> v) : n(n_), values(std::move(v)) {
        if (n <= 0) throw std::invalid_argument("HammingSpec: N must be positive");
        if (values.empty()) throw std::invalid_argument("HammingSpec: no defined weights");
        for (auto& [k, b] : values) {
            if (k < 0 || k > n) throw std::invalid_argument("HammingSpec: weight outside 0..N");
            if (b != 0 && b != 1) throw std::invalid_argument("HammingSpec: values must be 0 or 1");
        }
    }

    bool constant() const {
        int first = values.begin()->second;
        for (auto& [k, b] : values)
            if (b != first) return false;
        return true;
    }

    /// f -> 1 - f.
    HammingSpec complemented() const {
        std::map<int, int> v;
        for (auto& [k, b] : values) v[k] = 1 - b;
        return HammingSpec(n, std::move(v));
    }

    /// f(X) -> f(N - X), i.e. weight k becomes weight N - k.
    HammingSpec reversed() const {
        std::map<int, int> v;
        for (auto& [k, b] : values) v[n - k] = b;
        return HammingSpec(n, std::move(v));
    }
};

struct GammaResult {
    double gamma = 0.0;
    HammingSpec normalized;  // the orientation achieving the maximum
    int a = 0, b = 0;        // witness pair with f(a) = 0, f(b) = 1, a < b
    int transform = 0;       // 0 id, 1 complement, 2 reverse, 3 both
};

/// gamma = max over f(a)=0, f(b)=1 of sqrt(bN)/(b-a), evaluated across the
/// four orientations f -> 1-f, f(X) -> f(N-X), keeping the one achieving the
/// maximum with a < b and a <= N/2. Ties break to the lowest transform index.
inline GammaResult gamma(const HammingSpec& spec) {
    if (spec.constant()) throw std::invalid_argument("gamma: spec is constant");
    GammaResult best;
    bool found = false;
    HammingSpec variants[4] = {spec, spec.complemented(), spec.reversed(),
                               spec.reversed().complemented()};
    for (int t = 0; t < 4; ++t) {
        const HammingSpec& f = variants[t];
        for (auto& [a, va] : f.values) {
            if (va != 0 || 2 * a > f.n) continue;
            for (auto& [b, vb] : f.values) {
                if (vb != 1 || b <= a) continue;
                double g = std::sqrt(static_cast<double>(b) * f.n) / static_cast<double>(b - a);
                if (!found || g > best.gamma) {
                    found = true;
                    best.gamma = g;
                    best.normalized = f;
                    best.a = a;
                    best.b = b;
                    best.transform = t;
                }
            }
        }
    }
    if (!found) throw std::invalid_argument("gamma: no oriented 0/1 pair with a < b and a <= N/2");
    return best;
}

/// Q(f) lower-bound expression at a weight pair: sqrt((N-a) b) / (b-a).
/// Raw value, no hidden constants; the adversary module reproduces it by
/// enumeration.
inline double weight_lower_bound(int n, int a, int b) {
    if (!(0 <= a && a < b && b <= n)) throw std::invalid_argument("weight_lower_bound: need 0 <= a < b <= N");
    if (2 * a > n) throw std::invalid_argument("weight_lower_bound: need a <= N/2");
    return std::sqrt(static_cast<double>(n - a) * b) / static_cast<double>(b - a);
}

/// Square of the gamma the decision algorithm actually runs with: the
/// maximum of bN/(b - a)^2 over every defined pair f(a)=0, f(b)=1, with no
/// orientation restriction, held exactly. Using only oriented pairs can
/// leave a 1-weight close below N with a band wide enough to swallow
/// weight-N inputs; the absolute-gap maximum makes the algorithm exact on
/// weight-0 and weight-N.
inline Frac gamma_run_sq(const HammingSpec& spec) {
    if (spec.constant()) throw std::invalid_argument("gamma_run_sq: spec is constant");
    Frac best(0);
    for (auto& [a, va] : spec.values) {
        if (va != 0) continue;
        for (auto& [b, vb] : spec.values) {
            if (vb != 1) continue;
            if (b == 0) continue;  // the pair (a, 0) contributes zero
            long long gap = b - a;
            Frac cand(static_cast<long long>(b) * spec.n, gap * gap);
            if (best < cand) best = cand;
        }
    }
    return best;
}

inline double gamma_run(const HammingSpec& spec) { return std::sqrt(gamma_run_sq(spec).to_double()); }

/// Number of samples the weight estimator draws: ceil(C beta / eps^2).
inline long long hamming_sample_count(double beta_hint, double epsilon, double c = 27.0) {
    return static_cast<long long>(std::ceil(c * beta_hint / (epsilon * epsilon)));
}

/// Estimates |X|/N by sampling positions with replacement. Requires
/// 0 < epsilon < beta_hint.
inline double hamming_estimate(const std::vector<int>& bits, double epsilon, double beta_hint,
                               Rng& rng, double c = 27.0) {
    if (bits.empty()) throw std::invalid_argument("hamming_estimate: empty word");
    if (!(epsilon > 0) || !(epsilon < beta_hint))
        throw std::invalid_argument("hamming_estimate: need 0 < epsilon < beta_hint");
    long long samples = hamming_sample_count(beta_hint, epsilon, c);
    long long ones = 0;
    for (long long s = 0; s < samples; ++s)
        ones += bits[static_cast<size_t>(rng.uniform_int(0, static_cast<long long>(bits.size()) - 1))];
    return static_cast<double>(ones) / static_cast<double>(samples);
}

/// Sample budget exponent: max over defined pairs of N max(a,b) / (b-a)^2.
/// At least gamma_run^2; the extra max(a, b) keeps the estimate sharp enough
/// when the 0-weight sits far above the 1-weight.
inline double gamma_sample_sq(const HammingSpec& spec) {
    if (spec.constant()) throw std::invalid_argument("gamma_sample_sq: spec is constant");
    double best = 0.0;
    for (auto& [a, va] : spec.values) {
        if (va != 0) continue;
        for (auto& [b, vb] : spec.values) {
            if (vb != 1) continue;
            double gap = static_cast<double>(b - a);
            best = std::max(best, static_cast<double>(spec.n) * std::max(a, b) / (gap * gap));
        }
    }
    return best;
}

/// The appendix sampling algorithm: draw T = ceil(C_T gamma_sample^2) >= 1
/// positions, set k = (N/T) * (number of ones seen), and accept iff some
/// 1-weight b has |k - b| <= sqrt(bN)/(3 gamma_run). The band test squares
/// to the rational inequality 9 (N ones - b T)^2 gamma_run^2 <= b N T^2 and
/// is evaluated exactly; the sample counts sit on the band edge with
/// non-negligible probability. Exact on weight-0 and weight-N inputs: there
/// k is exact and every band stays strictly below its pair gap.
inline int appendix_decide(const HammingSpec& spec, const std::vector<int>& bits, Rng& rng,
                           double c_t = 9.0) {
    if (static_cast<int>(bits.size()) != spec.n)
        throw std::invalid_argument("appendix_decide: word length disagrees with spec");
    if (spec.constant()) throw std::invalid_argument("appendix_decide: spec is constant");
    const long long n = spec.n;
    const Frac gsq = gamma_run_sq(spec);
    long long t = std::max(1LL, static_cast<long long>(std::ceil(c_t * gamma_sample_sq(spec))));
    long long ones = 0;
    for (long long s = 0; s < t; ++s) ones += bits[static_cast<size_t>(rng.uniform_int(0, n - 1))];
    for (auto& [b, vb] : spec.values) {
        if (vb != 1) continue;
        // |N ones / T - b| <= sqrt(bN) / (3 gamma)
        __int128 num = static_cast<__int128>(n) * ones - static_cast<__int128>(b) * t;
        if (b == 0) {  // zero-width band
            if (num == 0) return 1;
            continue;
        }
        __int128 lhs = 9 * num * num * gsq.num;
        __int128 rhs = static_cast<__int128>(b) * n * t * t * gsq.den;
        if (lhs <= rhs) return 1;
    }
    return 0;
}

}  // namespace symq
