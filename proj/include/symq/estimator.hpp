#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symq/rational.hpp"
#include "symq/rng.hpp"
#include "symq/types.hpp"

namespace symq {

using bigint = boost::multiprecision::cpp_int;

inline bigint bigpow(bigint base, unsigned exp) {
    bigint r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/// Parameters of the sampling procedure. U is recomputed from (T, c) on
/// every access so it can never be stored inconsistently.
struct EstimatorParams {
    long long t = 2;
    CExp c;

    EstimatorParams() = default;
    EstimatorParams(long long t_, CExp c_) : t(t_), c(c_) {
        if (t < 2) throw std::invalid_argument("EstimatorParams: T must be at least 2");
    }

    /// U = ceil(24 T^{1+c} ln T).
    unsigned long long u() const {
        long double exact = 24.0L * std::pow(static_cast<long double>(t), 1.0L + c.to_double()) *
                            std::log(static_cast<long double>(t));
        return static_cast<unsigned long long>(std::ceil(exact));
    }
};

/// Raw sample counts z_j together with (N, U); the estimates
/// kappa~_j = (N/U) z_j are derived exactly as fractions.
struct MultiplicityEstimate {
    std::vector<long long> sample_counts;
    long long n = 0;
    unsigned long long u = 0;

    std::vector<Frac> values() const {
        std::vector<Frac> v;
        v.reserve(sample_counts.size());
        for (long long z : sample_counts) v.emplace_back(n * z, static_cast<long long>(u));
        return v;
    }
};

/// S_T: draw U positions uniformly with replacement, tally symbols.
inline MultiplicityEstimate run_sampler(const InputWord& x, const EstimatorParams& params, Rng& rng) {
    MultiplicityEstimate est;
    est.n = x.n();
    est.u = params.u();
    est.sample_counts.assign(x.m, 0);
    for (unsigned long long s = 0; s < est.u; ++s) {
        long long i = rng.uniform_int(0, est.n - 1);
        ++est.sample_counts[x.entries[static_cast<size_t>(i)] - 1];
    }
    return est;
}

namespace detail {

/// Exact predicate: delta <= y / T^{c}, for a nonnegative rational
/// delta = dn/dd and integer y >= 0, with c = p/q. Equivalent integer form:
/// dn^q * T^p <= y^q * dd^q.
inline bool le_power_threshold(long long dn, long long dd, long long y, long long t, CExp c) {
    if (dn <= 0) return true;
    if (y <= 0) return false;
    bigint lhs = bigpow(bigint(dn), static_cast<unsigned>(c.den)) * bigpow(bigint(t), static_cast<unsigned>(c.num));
    bigint rhs = bigpow(bigint(y), static_cast<unsigned>(c.den)) * bigpow(bigint(dd), static_cast<unsigned>(c.den));
    return lhs <= rhs;
}

}  // namespace detail

/// |kappa - a| <= N/T + a/T^c, exactly, for kappa = zn/zd.
inline bool within_one_type_band(long long zn, long long zd, long long a, long long n,
                                 long long t, CExp c) {
    // delta = |zn/zd - a| - n/t = (|zn t - a zd t| - n zd) / (zd t)
    __int128 diff = static_cast<__int128>(zn) * t - static_cast<__int128>(a) * zd * t;
    if (diff < 0) diff = -diff;
    __int128 num = diff - static_cast<__int128>(n) * zd;
    if (num <= 0) return true;
    long long dn = static_cast<long long>(num);
    long long dd = zd * t;
    return detail::le_power_threshold(dn, dd, a, t, c);
}

/// Separation condition: exists i with |a_i - b_i| > 2N/T + (a_i+b_i)/T^c.
inline bool separation_holds(const TypeProfile& a, const TypeProfile& b, long long t, CExp c) {
    if (a.n() != b.n()) throw std::invalid_argument("separation_holds: profiles disagree on N");
    long long n = a.n();
    size_t len = std::max(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < len; ++i) {
        long long ai = a.at(i), bi = b.at(i);
        long long gap = std::llabs(ai - bi);
        // gap > 2n/t + (ai+bi)/t^c  <=>  (gap*t - 2n)/t > (ai+bi)/t^c
        long long dn = gap * t - 2 * n;
        if (dn <= 0) continue;
        if (!detail::le_power_threshold(dn, t, ai + bi, t, c)) return true;
    }
    return false;
}

/// Hard-core inequality: |a_i - b_i| <= 3N/T + (a_i+b_i)/T^c for all i.
inline bool abbound_holds(const TypeProfile& a, const TypeProfile& b, long long t, CExp c) {
    if (a.n() != b.n()) throw std::invalid_argument("abbound_holds: profiles disagree on N");
    long long n = a.n();
    size_t len = std::max(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < len; ++i) {
        long long ai = a.at(i), bi = b.at(i);
        long long dn = std::llabs(ai - bi) * t - 3 * n;
        if (dn <= 0) continue;
        if (!detail::le_power_threshold(dn, t, ai + bi, t, c)) return false;
    }
    return true;
}

/// Largest z (given N, U, T, c and row value a) with (N/U)z inside the
/// one-type band, and the smallest; computed by binary search on the exact
/// predicate. Lets Monte Carlo loops test counts with plain comparisons.
struct ZBand {
    long long lo = 0;
    long long hi = -1;  // empty band when hi < lo
};

inline ZBand band_z_range(long long n, unsigned long long u, long long a, long long t, CExp c) {
    auto inside = [&](long long z) {
        return within_one_type_band(n * z, static_cast<long long>(u), a, n, t, c);
    };
    // kappa~ = (n/u) z is monotone in z, so the band is an interval around a*u/n.
    long long center = std::clamp(static_cast<long long>((static_cast<__int128>(a) * u) / n),
                                  0LL, static_cast<long long>(u));
    if (!inside(center)) {
        bool found = false;
        for (long long z : {center - 1, center + 1, 0LL}) {
            if (z >= 0 && z <= static_cast<long long>(u) && inside(z)) {
                center = z;
                found = true;
                break;
            }
        }
        if (!found) return ZBand{};
    }
    ZBand band;
    long long lo = 0, hi = center;
    if (inside(0)) {
        band.lo = 0;
    } else {
        while (lo + 1 < hi) {  // inside(hi), !inside(lo)
            long long mid = lo + (hi - lo) / 2;
            (inside(mid) ? hi : lo) = mid;
        }
        band.lo = hi;
    }
    lo = center, hi = static_cast<long long>(u);
    if (inside(hi)) {
        band.hi = hi;
    } else {
        while (lo + 1 < hi) {  // inside(lo), !inside(hi)
            long long mid = lo + (hi - lo) / 2;
            (inside(mid) ? lo : hi) = mid;
        }
        band.hi = lo;
    }
    return band;
}

/// R_T: sample, sort the estimates descending, output 1 iff some 1-type is
/// within the band on every row.
inline int decide(const SymmetricFunction& f, const InputWord& x, const EstimatorParams& params,
                  Rng& rng) {
    if (f.ones.empty() && f.zeros.empty())
        throw std::invalid_argument("decide: function defines no types");
    MultiplicityEstimate est = run_sampler(x, params, rng);
    std::vector<long long> z = est.sample_counts;
    std::sort(z.begin(), z.end(), std::greater<long long>());
    long long n = est.n;
    long long u = static_cast<long long>(est.u);
    for (const TypeProfile& a : f.ones) {
        size_t len = std::max(z.size(), a.parts.size());
        bool all = true;
        for (size_t i = 0; i < len && all; ++i) {
            long long zi = i < z.size() ? z[i] : 0;
            all = within_one_type_band(n * zi, u, a.at(i), n, params.t, params.c);
        }
        if (all) return 1;
    }
    return 0;
}

/// A 1-type/0-type pair that the sampler just barely distinguishes at T.
struct HardCore {
    long long t = 0;
    TypeProfile one_type;
    TypeProfile zero_type;
};

/// Scans T downward from 3N and stops at the first T where some pair of
/// defined types satisfies the hard-core inequality. The inequality always
/// holds at T = 2 (3N/2 dominates every row gap), so the scan terminates.
inline HardCore find_hard_core(const SymmetricFunction& f, CExp c) {
    if (f.ones.empty() || f.zeros.empty())
        throw std::invalid_argument("find_hard_core: need at least one 1-type and one 0-type");
    long long tmax = 3 * f.n;
    for (long long t = tmax; t >= 2; --t) {
        for (const TypeProfile& a : f.ones)
            for (const TypeProfile& b : f.zeros)
                if (abbound_holds(a, b, t, c)) return HardCore{t, a, b};
    }
    throw std::logic_error("find_hard_core: scan exhausted without a satisfying pair");
}

}  // namespace symq
