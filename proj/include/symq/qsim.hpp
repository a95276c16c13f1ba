#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "symq/polynomial.hpp"
#include "symq/rng.hpp"

namespace symq {

using cdouble = std::complex<double>;

/// Dense square complex matrix, row-major.
struct CMatrix {
    int dim = 0;
    std::vector<cdouble> a;

    CMatrix() = default;
    explicit CMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

    cdouble& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const cdouble& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }

    std::vector<cdouble> mul(const std::vector<cdouble>& v) const {
        std::vector<cdouble> out(static_cast<size_t>(dim));
        for (int r = 0; r < dim; ++r) {
            cdouble s = 0;
            const cdouble* row = &a[static_cast<size_t>(r) * dim];
            for (int c = 0; c < dim; ++c) s += row[c] * v[static_cast<size_t>(c)];
            out[static_cast<size_t>(r)] = s;
        }
        return out;
    }

    /// Frobenius norm of U* U - I.
    double unitarity_defect() const {
        double s = 0.0;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                cdouble e = 0;
                for (int k = 0; k < dim; ++k) e += std::conj(at(k, r)) * at(k, c);
                if (r == c) e -= 1.0;
                s += std::norm(e);
            }
        }
        return std::sqrt(s);
    }
};

/// A T-query algorithm on an N-bit oracle: unitaries U_0..U_T on basis
/// states |i, w> with i in {0..N} (i = 0 never queries) and w in [W].
/// The oracle between consecutive unitaries is the phase map
/// |i, w> -> (-1)^{x_i} |i, w> for i >= 1. Acceptance is a basis subset.
struct QueryCircuit {
    int n = 0;
    int t = 0;
    int w = 1;
    std::vector<CMatrix> unitaries;  // T+1 of them
    std::vector<int> accept;         // basis indices

    int dim() const { return (n + 1) * w; }

    void validate(double tol = 1e-10) const {
        if (n <= 0 || w <= 0 || t < 0) throw std::invalid_argument("QueryCircuit: bad shape");
        if (static_cast<int>(unitaries.size()) != t + 1)
            throw std::invalid_argument("QueryCircuit: need exactly T+1 unitaries");
        for (const auto& u : unitaries) {
            if (u.dim != dim()) throw std::invalid_argument("QueryCircuit: unitary has wrong dimension");
            if (u.unitarity_defect() > tol)
                throw std::invalid_argument("QueryCircuit: matrix fails unitarity tolerance");
        }
        for (int idx : accept)
            if (idx < 0 || idx >= dim()) throw std::invalid_argument("QueryCircuit: accept index out of range");
    }

    /// Final state on input x (bit i of x is x_{i+1}).
    std::vector<cdouble> run(uint32_t x) const {
        std::vector<cdouble> v(static_cast<size_t>(dim()));
        v[0] = 1.0;  // initial basis state |0, 1>
        for (int q = 0; q < t; ++q) {
            v = unitaries[static_cast<size_t>(q)].mul(v);
            for (int i = 1; i <= n; ++i) {
                if ((x >> (i - 1)) & 1) {
                    for (int k = 0; k < w; ++k) v[static_cast<size_t>(i) * w + k] = -v[static_cast<size_t>(i) * w + k];
                }
            }
        }
        return unitaries[static_cast<size_t>(t)].mul(v);
    }

    double acceptance_probability(uint32_t x) const {
        auto v = run(x);
        double p = 0.0;
        for (int idx : accept) p += std::norm(v[static_cast<size_t>(idx)]);
        return p;
    }
};

/// Evaluates the circuit on every input and interpolates the acceptance
/// polynomial. Budget-guarded at N <= 20.
inline BoundedPolynomial extract_polynomial(const QueryCircuit& circ) {
    if (circ.n > 20) throw std::length_error("extract_polynomial: 2^N evaluation budget exceeded");
    std::vector<double> values(size_t{1} << circ.n);
    for (uint32_t x = 0; x < values.size(); ++x) values[x] = circ.acceptance_probability(x);
    return BoundedPolynomial::from_values(circ.n, std::move(values));
}

struct SensitivityReport {
    double value = 0.0;      // E_{X,i} ||psi_X - psi_{X^i}||^2
    double reference = 0.0;  // 2T/N
    bool within = true;      // value <= reference + 1e-9
};

/// Exact average over X in {0,1}^N and i in [N] of the squared distance
/// between final states of neighbouring inputs, reported against the 2T/N
/// reference line.
inline SensitivityReport state_sensitivity(const QueryCircuit& circ) {
    if (circ.n > 16) throw std::length_error("state_sensitivity: 2^N state budget exceeded");
    const size_t cube = size_t{1} << circ.n;
    std::vector<std::vector<cdouble>> states(cube);
    for (uint32_t x = 0; x < cube; ++x) states[x] = circ.run(x);
    double total = 0.0;
    for (uint32_t x = 0; x < cube; ++x) {
        for (int i = 0; i < circ.n; ++i) {
            uint32_t y = x ^ (uint32_t{1} << i);
            if (y < x) continue;
            double d = 0.0;
            for (size_t k = 0; k < states[x].size(); ++k) d += std::norm(states[x][k] - states[y][k]);
            total += 2.0 * d;  // both (x, i) and (y, i) contribute the same term
        }
    }
    SensitivityReport rep;
    rep.value = total / (static_cast<double>(cube) * circ.n);
    rep.reference = 2.0 * circ.t / circ.n;
    rep.within = rep.value <= rep.reference + 1e-9;
    return rep;
}

/// Haar-like random unitary: complex Gaussian entries orthonormalized by
/// modified Gram-Schmidt on columns.
inline CMatrix random_unitary(int dim, Rng& rng) {
    CMatrix u(dim);
    for (auto& e : u.a) e = cdouble(rng.gaussian(), rng.gaussian());
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cdouble dot = 0;
            for (int r = 0; r < dim; ++r) dot += std::conj(u.at(r, prev)) * u.at(r, c);
            for (int r = 0; r < dim; ++r) u.at(r, c) -= dot * u.at(r, prev);
        }
        double norm = 0;
        for (int r = 0; r < dim; ++r) norm += std::norm(u.at(r, c));
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw std::runtime_error("random_unitary: degenerate draw");
        for (int r = 0; r < dim; ++r) u.at(r, c) /= norm;
    }
    return u;
}

/// Random T-query circuit; the accept set is the first half of the basis.
inline QueryCircuit random_circuit(int n, int t, int w, Rng& rng) {
    QueryCircuit c;
    c.n = n;
    c.t = t;
    c.w = w;
    for (int q = 0; q <= t; ++q) c.unitaries.push_back(random_unitary(c.dim(), rng));
    for (int idx = 0; idx < c.dim() / 2; ++idx) c.accept.push_back(idx);
    return c;
}

/// The two-bit Deutsch circuit: one query, acceptance probability exactly
/// x1 + x2 - 2 x1 x2. Uses W = 1, D = 3.
inline QueryCircuit deutsch_circuit() {
    const double r = 1.0 / std::sqrt(2.0);
    QueryCircuit c;
    c.n = 2;
    c.t = 1;
    c.w = 1;
    CMatrix u0(3), u1(3);
    // u0: |0> -> (|1> + |2>)/sqrt(2)
    u0.at(0, 1) = 1.0;
    u0.at(1, 0) = r;
    u0.at(1, 2) = r;
    u0.at(2, 0) = r;
    u0.at(2, 2) = -r;
    // u1: (|1> + |2>)/sqrt(2) -> |1>, (|1> - |2>)/sqrt(2) -> |2>
    u1.at(0, 0) = 1.0;
    u1.at(1, 1) = r;
    u1.at(1, 2) = r;
    u1.at(2, 1) = r;
    u1.at(2, 2) = -r;
    c.unitaries = {u0, u1};
    c.accept = {2};
    return c;
}

}  // namespace symq
