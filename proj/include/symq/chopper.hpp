#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "symq/estimator.hpp"
#include "symq/types.hpp"

namespace symq {

/// P = first power of 2 with P >= N, L = ceil(log2 N).
struct ChopParams {
    long long n = 1;
    long long p = 1;
    int l = 0;

    static ChopParams make(long long n) {
        if (n <= 0) throw std::invalid_argument("ChopParams: N must be positive");
        ChopParams cp;
        cp.n = n;
        cp.p = 1;
        cp.l = 0;
        while (cp.p < n) {
            cp.p <<= 1;
            ++cp.l;
        }
        return cp;
    }
};

/// Per-level record of one chopping pass.
struct ChopStep {
    int level = 0;              // ell, 1-based
    long long chop_size = 0;    // P / 2^ell
    long long rows_chopped = 0; // r
    long long distance = 0;     // ||A_ell - A_{ell-1}|| = r * P/2^ell
    std::vector<int> chopped_row_indices;  // indices into the evolving row-array
};

/// Output of the chopping procedure: A_0 ... A_L plus step metadata.
struct HybridSequence {
    ChopParams params;
    TypeProfile start;      // A*
    TypeProfile baseline;   // B*, fixed comparison side
    std::vector<TypeProfile> profiles;  // A_0 .. A_L
    std::vector<ChopStep> steps;        // L entries

    long long total_rows_chopped() const {
        long long s = 0;
        for (const auto& st : steps) s += st.rows_chopped;
        return s;
    }
};

/// Runs the chopping procedure from A* against the fixed baseline B*.
/// The evolving row-array starts as A* padded to 2N; each chop at level ell
/// subtracts P/2^ell from a row with a_i - b_i >= P/2^ell and a_i > P/2^ell,
/// writing the removed piece into the lowest-index slot with a_j = b_j = 0.
inline HybridSequence chop_sequence(const TypeProfile& astar, const TypeProfile& bstar) {
    if (astar.n() != bstar.n()) throw std::invalid_argument("chop_sequence: profiles disagree on N");
    HybridSequence seq;
    seq.params = ChopParams::make(astar.n());
    seq.start = astar;
    seq.baseline = bstar;

    const long long n = seq.params.n;
    RowArray a = RowArray::from_profile(astar);
    RowArray b = RowArray::from_profile(bstar);
    seq.profiles.push_back(astar);

    for (int ell = 1; ell <= seq.params.l; ++ell) {
        const long long chunk = seq.params.p >> ell;
        ChopStep step;
        step.level = ell;
        step.chop_size = chunk;
        const std::vector<int> before = a.rows;
        for (int i = 0; i < 2 * n; ++i) {
            if (a.rows[i] - b.rows[i] >= chunk && a.rows[i] > chunk) {
                a.rows[i] -= static_cast<int>(chunk);
                int j = 0;
                while (j < 2 * n && !(a.rows[j] == 0 && b.rows[j] == 0)) ++j;
                if (j == 2 * n) throw std::logic_error("chop_sequence: no fresh slot available");
                a.rows[j] = static_cast<int>(chunk);
                step.chopped_row_indices.push_back(i);
                ++step.rows_chopped;
            }
        }
        // ||A_ell - A_{ell-1}|| on the row-array, where rows keep their
        // identity; sorting into types can merge a chopped remainder with an
        // equal row and undershoot r * P/2^ell.
        long long twice = 0;
        for (int i = 0; i < 2 * n; ++i) twice += std::llabs(static_cast<long long>(a.rows[i]) - before[i]);
        step.distance = twice / 2;
        seq.profiles.push_back(sort_to_type(a));
        seq.steps.push_back(std::move(step));
    }
    return seq;
}

/// The common endpoint of both chop sequences: ||A - B|| singleton rows plus
/// one row of length min(a_i, b_i) for every i with a positive minimum.
inline TypeProfile final_configuration(const TypeProfile& a, const TypeProfile& b) {
    if (a.n() != b.n()) throw std::invalid_argument("final_configuration: profiles disagree on N");
    long long singles = profile_distance(a, b);
    std::vector<int> parts;
    size_t len = std::max(a.parts.size(), b.parts.size());
    for (size_t i = 0; i < len; ++i) {
        int m = std::min(a.at(i), b.at(i));
        if (m > 0) parts.push_back(m);
    }
    parts.insert(parts.end(), static_cast<size_t>(singles), 1);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return TypeProfile(std::move(parts));
}

/// One row of the level-wise d_ell <= 8N/T^c check. Levels with
/// 2^{ell+2} > T do not qualify and are reported but not asserted.
struct ChopubEntry {
    int level = 0;
    long long distance = 0;
    bool qualifies = false;
    bool ok = true;        // meaningful only when qualifies
    double margin = 0.0;   // 8N/T^c - d_ell in floating point, for reporting
};

inline std::vector<ChopubEntry> chopub_check(const HybridSequence& seq, long long t, CExp c) {
    std::vector<ChopubEntry> out;
    const long long n = seq.params.n;
    double bound = 8.0 * static_cast<double>(n) / std::pow(static_cast<double>(t), c.to_double());
    for (const auto& step : seq.steps) {
        ChopubEntry e;
        e.level = step.level;
        e.distance = step.distance;
        // ell <= log2(T) - 2  <=>  2^{ell+2} <= T, exactly in integers.
        e.qualifies = step.level <= 61 && (1LL << (step.level + 2)) <= t;
        if (e.qualifies) {
            // d <= 8N/T^c  <=>  d^q T^p <= (8N)^q
            bigint lhs = bigpow(bigint(step.distance), static_cast<unsigned>(c.den)) *
                         bigpow(bigint(t), static_cast<unsigned>(c.num));
            bigint rhs = bigpow(bigint(8 * n), static_cast<unsigned>(c.den));
            e.ok = lhs <= rhs;
        }
        e.margin = bound - static_cast<double>(step.distance);
        out.push_back(e);
    }
    return out;
}

/// beta_ell = 1/(10 ell^2); the full series sums to pi^2/60 < 1/6.
inline std::vector<double> bias_schedule(int levels) {
    std::vector<double> betas;
    betas.reserve(levels);
    for (int ell = 1; ell <= levels; ++ell) betas.push_back(1.0 / (10.0 * ell * ell));
    return betas;
}

/// Raw per-level bound bookkeeping; no hidden constants.
struct BoundRow {
    int level = 0;
    long long rows_chopped = 0;
    long long distance = 0;
    double sqrt_n_over_d = 0.0;      // sqrt(N/d)
    double set_equality_term = 0.0;  // (r / log2 r)^{1/5}, r^{1/5} when r <= 2
    double level_target = 0.0;       // 2^{ell/7} / ell^{1/7}
    double sqrt_tc = 0.0;            // sqrt(T^c)
    double beta = 0.0;               // 1/(10 ell^2)
    double case_small_level = 0.0;   // sqrt(T^c) / ell^2
    double case_large_level = 0.0;   // (1/ell^2) * 2^{ell/7} / ell^{1/7}
};

inline std::vector<BoundRow> bound_profile(const HybridSequence& seq, long long t, CExp c) {
    std::vector<BoundRow> rows;
    const double n = static_cast<double>(seq.params.n);
    const double tc = std::pow(static_cast<double>(t), c.to_double());
    for (const auto& step : seq.steps) {
        if (step.rows_chopped == 0) continue;
        BoundRow row;
        row.level = step.level;
        row.rows_chopped = step.rows_chopped;
        row.distance = step.distance;
        row.sqrt_n_over_d = std::sqrt(n / static_cast<double>(step.distance));
        double r = static_cast<double>(step.rows_chopped);
        row.set_equality_term = r <= 2 ? std::pow(r, 0.2) : std::pow(r / std::log2(r), 0.2);
        double ell = step.level;
        row.level_target = std::pow(2.0, ell / 7.0) / std::pow(ell, 1.0 / 7.0);
        row.sqrt_tc = std::sqrt(tc);
        row.beta = 1.0 / (10.0 * ell * ell);
        row.case_small_level = row.sqrt_tc / (ell * ell);
        row.case_large_level = row.level_target / (ell * ell);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace symq
