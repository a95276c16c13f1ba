#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symq {

/// A real multilinear polynomial on {0,1}^N, held both as monomial
/// coefficients alpha_S (indexed by subset bitmask) and as its full value
/// table. The two views are kept consistent by construction.
struct BoundedPolynomial {
    int n = 0;
    std::vector<double> coeffs;  // size 2^n, coeffs[mask] = alpha_S
    std::vector<double> values;  // size 2^n, values[x] = p(x)

    size_t cube() const { return size_t{1} << n; }

    double eval(uint32_t x) const { return values[x]; }

    /// Builds from a value table by Moebius inversion over the subset
    /// lattice: alpha_S = sum_{S' subseteq S} (-1)^{|S|-|S'|} p(1_{S'}).
    static BoundedPolynomial from_values(int n, std::vector<double> values) {
        if (n < 0 || values.size() != (size_t{1} << n))
            throw std::invalid_argument("BoundedPolynomial: value table has wrong size");
        BoundedPolynomial p;
        p.n = n;
        p.values = std::move(values);
        p.coeffs = p.values;
        for (int i = 0; i < n; ++i) {
            size_t bit = size_t{1} << i;
            for (size_t mask = 0; mask < p.cube(); ++mask)
                if (mask & bit) p.coeffs[mask] -= p.coeffs[mask ^ bit];
        }
        return p;
    }

    /// Builds from coefficients by the zeta transform (subset sums).
    static BoundedPolynomial from_coeffs(int n, std::vector<double> coeffs) {
        if (n < 0 || coeffs.size() != (size_t{1} << n))
            throw std::invalid_argument("BoundedPolynomial: coefficient table has wrong size");
        BoundedPolynomial p;
        p.n = n;
        p.coeffs = std::move(coeffs);
        p.values = p.coeffs;
        for (int i = 0; i < n; ++i) {
            size_t bit = size_t{1} << i;
            for (size_t mask = 0; mask < p.cube(); ++mask)
                if (mask & bit) p.values[mask] += p.values[mask ^ bit];
        }
        return p;
    }

    int degree(double tol = 1e-8) const {
        int d = 0;
        for (size_t mask = 0; mask < cube(); ++mask)
            if (std::abs(coeffs[mask]) > tol) d = std::max(d, std::popcount(mask));
        return d;
    }

    /// Largest |alpha_S| among monomials of degree above d.
    double max_coeff_above_degree(int d) const {
        double worst = 0.0;
        for (size_t mask = 0; mask < cube(); ++mask)
            if (std::popcount(mask) > d) worst = std::max(worst, std::abs(coeffs[mask]));
        return worst;
    }

    double min_value() const { return *std::min_element(values.begin(), values.end()); }
    double max_value() const { return *std::max_element(values.begin(), values.end()); }
};

/// Inf_i[p] = E_X |p(X) - p(X^i)|.
inline double influence(const BoundedPolynomial& p, int i) {
    if (i < 0 || i >= p.n) throw std::out_of_range("influence: variable index out of range");
    size_t bit = size_t{1} << i;
    double s = 0.0;
    for (size_t x = 0; x < p.cube(); ++x)
        if (!(x & bit)) s += std::abs(p.values[x] - p.values[x | bit]);
    return s / static_cast<double>(p.cube() / 2);
}

inline std::vector<double> influences(const BoundedPolynomial& p) {
    std::vector<double> out(p.n);
    for (int i = 0; i < p.n; ++i) out[i] = influence(p, i);
    return out;
}

inline double sum_influence(const BoundedPolynomial& p) {
    double s = 0.0;
    for (int i = 0; i < p.n; ++i) s += influence(p, i);
    return s;
}

/// Vr[p] = E_{X,Y} |p(X) - p(Y)|, computed by sorting the value table:
/// with v sorted ascending, sum_{j<k} (v_k - v_j) = sum_k v_k (2k - K + 1).
inline double variance_l1(const BoundedPolynomial& p) {
    std::vector<double> v(p.values);
    std::sort(v.begin(), v.end());
    const double k = static_cast<double>(v.size());
    double s = 0.0;
    for (size_t j = 0; j < v.size(); ++j)
        s += v[j] * (2.0 * static_cast<double>(j) - k + 1.0);
    return 2.0 * s / (k * k);
}

/// ||p||_2^2 = E_X [p(X)^2].
inline double l2_norm_sq(const BoundedPolynomial& p) {
    double s = 0.0;
    for (double v : p.values) s += v * v;
    return s / static_cast<double>(p.cube());
}

inline double mean_value(const BoundedPolynomial& p) {
    double s = 0.0;
    for (double v : p.values) s += v;
    return s / static_cast<double>(p.cube());
}

/// The polynomial induced by fixing x_i := b; variables above i shift down.
inline BoundedPolynomial restrict(const BoundedPolynomial& p, int i, int b) {
    if (i < 0 || i >= p.n) throw std::out_of_range("restrict: variable index out of range");
    if (p.n == 0) throw std::out_of_range("restrict: no variables left");
    size_t bit = size_t{1} << i;
    std::vector<double> values(p.cube() / 2);
    for (size_t x = 0; x < values.size(); ++x) {
        size_t low = x & (bit - 1);
        size_t high = (x & ~(bit - 1)) << 1;
        size_t full = high | low | (b ? bit : 0);
        values[x] = p.values[full];
    }
    return BoundedPolynomial::from_values(p.n - 1, std::move(values));
}

/// Relabels variables: variable i of the result is variable perm[i] of p.
inline BoundedPolynomial permute_variables(const BoundedPolynomial& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.n)
        throw std::invalid_argument("permute_variables: permutation has wrong size");
    std::vector<double> values(p.cube());
    for (size_t x = 0; x < p.cube(); ++x) {
        size_t y = 0;
        for (int i = 0; i < p.n; ++i)
            if (x & (size_t{1} << i)) y |= size_t{1} << perm[i];
        values[x] = p.values[y];
    }
    return BoundedPolynomial::from_values(p.n, std::move(values));
}

}  // namespace symq
