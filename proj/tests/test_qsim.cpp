#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "symq/polynomial.hpp"
#include "symq/qsim.hpp"

using namespace symq;

TEST_CASE("circuit validation") {
    QueryCircuit circ = deutsch_circuit();
    CHECK_NOTHROW(circ.validate());
    circ.unitaries[0].at(0, 0) += 1e-6;
    CHECK_THROWS_AS(circ.validate(), std::invalid_argument);
}

TEST_CASE("zero-query circuits are constant") {
    QueryCircuit circ;
    circ.n = 3;
    circ.t = 0;
    circ.w = 2;
    Rng rng(1);
    circ.unitaries.push_back(random_unitary(circ.dim(), rng));
    circ.accept = {0, 1};
    double p0 = circ.acceptance_probability(0);
    for (uint32_t x = 1; x < 8; ++x) CHECK(circ.acceptance_probability(x) == Catch::Approx(p0));
    CHECK(state_sensitivity(circ).value == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("Deutsch circuit computes the two-bit parity") {
    QueryCircuit circ = deutsch_circuit();
    CHECK(circ.acceptance_probability(0b00) == Catch::Approx(0.0).margin(1e-12));
    CHECK(circ.acceptance_probability(0b01) == Catch::Approx(1.0).margin(1e-12));
    CHECK(circ.acceptance_probability(0b10) == Catch::Approx(1.0).margin(1e-12));
    CHECK(circ.acceptance_probability(0b11) == Catch::Approx(0.0).margin(1e-12));
    BoundedPolynomial p = extract_polynomial(circ);
    CHECK(std::abs(p.coeffs[0b00]) <= 1e-9);
    CHECK(std::abs(p.coeffs[0b01] - 1.0) <= 1e-9);
    CHECK(std::abs(p.coeffs[0b10] - 1.0) <= 1e-9);
    CHECK(std::abs(p.coeffs[0b11] + 2.0) <= 1e-9);
    CHECK(influence(p, 0) == Catch::Approx(1.0));
    CHECK(influence(p, 1) == Catch::Approx(1.0));
    CHECK(variance_l1(p) == Catch::Approx(0.5));
    CHECK(sum_influence(p) == Catch::Approx(2.0));
    // each bit flip swaps two orthogonal final states
    SensitivityReport sens = state_sensitivity(circ);
    CHECK(sens.value == Catch::Approx(2.0).margin(1e-12));
    CHECK(!sens.within);
}

TEST_CASE("acceptance probabilities stay in the unit interval") {
    Rng rng(55);
    for (int rep = 0; rep < 10; ++rep) {
        QueryCircuit circ = random_circuit(4, 2, 3, rng);
        for (uint32_t x = 0; x < 16; ++x) {
            double p = circ.acceptance_probability(x);
            CHECK(p >= -1e-12);
            CHECK(p <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("coefficients reproduce the value table") {
    Rng rng(56);
    QueryCircuit circ = random_circuit(5, 2, 3, rng);
    BoundedPolynomial p = extract_polynomial(circ);
    BoundedPolynomial rebuilt = BoundedPolynomial::from_coeffs(p.n, p.coeffs);
    for (size_t x = 0; x < p.cube(); ++x)
        CHECK(std::abs(rebuilt.values[x] - p.values[x]) <= 1e-9);
}

TEST_CASE("degree bound for random two-query circuits") {
    Rng rng(57);
    for (int rep = 0; rep < 20; ++rep) {
        QueryCircuit circ = random_circuit(6, 2, 3, rng);
        BoundedPolynomial p = extract_polynomial(circ);
        CHECK(p.max_coeff_above_degree(4) <= 1e-8);
    }
}

TEST_CASE("single-variable polynomial quantities") {
    // p = x_1 on two variables
    BoundedPolynomial p = BoundedPolynomial::from_values(2, {0.0, 1.0, 0.0, 1.0});
    CHECK(influence(p, 0) == Catch::Approx(1.0));
    CHECK(influence(p, 1) == Catch::Approx(0.0).margin(1e-15));
    CHECK(variance_l1(p) == Catch::Approx(0.5));
    CHECK(sum_influence(p) == Catch::Approx(1.0));
    CHECK(l2_norm_sq(p) == Catch::Approx(0.5));
    BoundedPolynomial c = BoundedPolynomial::from_values(2, {0.3, 0.3, 0.3, 0.3});
    CHECK(variance_l1(c) == Catch::Approx(0.0).margin(1e-15));
    CHECK(sum_influence(c) == Catch::Approx(0.0).margin(1e-15));
    CHECK(l2_norm_sq(c) == Catch::Approx(0.09));
}

TEST_CASE("variance matches the quadratic oracle") {
    Rng rng(58);
    for (int n : {3, 5}) {
        std::vector<double> values(size_t{1} << n);
        for (auto& v : values) v = rng.uniform();
        BoundedPolynomial p = BoundedPolynomial::from_values(n, values);
        double brute = 0.0;
        for (double a : values)
            for (double b : values) brute += std::abs(a - b);
        brute /= static_cast<double>(values.size()) * values.size();
        CHECK(variance_l1(p) == Catch::Approx(brute));
    }
}

TEST_CASE("permuting variables preserves variance and total influence") {
    Rng rng(59);
    BoundedPolynomial p = extract_polynomial(random_circuit(5, 1, 3, rng));
    std::vector<int> perm{2, 0, 4, 1, 3};
    BoundedPolynomial q = permute_variables(p, perm);
    CHECK(variance_l1(q) == Catch::Approx(variance_l1(p)));
    CHECK(sum_influence(q) == Catch::Approx(sum_influence(p)));
}

TEST_CASE("budget guards") {
    QueryCircuit big;
    big.n = 21;
    CHECK_THROWS_AS(extract_polynomial(big), std::length_error);
    big.n = 17;
    CHECK_THROWS_AS(state_sensitivity(big), std::length_error);
}
