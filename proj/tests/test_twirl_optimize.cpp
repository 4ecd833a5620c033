// Copyright 2026 The honestq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "honestq/approximate.hpp"
#include "honestq/diamond.hpp"
#include "honestq/nelder_mead.hpp"
#include "honestq/pauli.hpp"
#include "honestq/presets.hpp"
#include "honestq/twirl.hpp"
#include "test_helpers.hpp"

using namespace honestq;

TEST_CASE("twirl zeroes chi off-diagonals and keeps the diagonal") {
    QuantumChannel ch = make_dephase_axis(0.05, rotation_axis(1));
    ChiMatrix before = kraus_to_chi(ch);
    ChiMatrix after = kraus_to_chi(pauli_twirl(ch));
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            if (r == c) {
                CHECK(after.chi(r, c).real() ==
                      doctest::Approx(before.chi(r, c).real()).epsilon(1e-12));
            } else {
                CHECK(std::abs(after.chi(r, c)) < 1e-12);
            }
        }
    }
}

TEST_CASE("twirl is idempotent and fixes pauli channels") {
    QuantumChannel ch = make_rotation(0.4, rotation_axis(1));
    QuantumChannel once = pauli_twirl(ch);
    QuantumChannel twice = pauli_twirl(once);
    CHECK(max_abs(kraus_to_chi(once).chi - kraus_to_chi(twice).chi) < 1e-12);

    QuantumChannel dep = make_depolarizing(0.03);
    CHECK(max_abs(kraus_to_chi(pauli_twirl(dep)).chi - kraus_to_chi(dep).chi) < 1e-12);
}

TEST_CASE("twirl agrees with the group average") {
    uint64_t st = 19;
    for (int n : {1, 2}) {
        QuantumChannel ch = honestq::testing::random_unitary_mixture(n, 3, st);
        CHECK(twirl_equivalence_check(ch, 40, 11) < 1e-12);
    }
}

TEST_CASE("nelder-mead minimizes simple functions") {
    auto quadratic = [](const std::vector<double> &x) {
        double v = 0;
        for (size_t i = 0; i < x.size(); i++) {
            double d = x[i] - static_cast<double>(i);
            v += (i + 1) * d * d;
        }
        return v;
    };
    NelderMeadResult res = nelder_mead(quadratic, {5.0, -3.0, 2.0});
    CHECK(res.f < 1e-10);
    for (size_t i = 0; i < 3; i++) {
        CHECK(res.x[i] == doctest::Approx(static_cast<double>(i)).epsilon(1e-4));
    }

    auto rosenbrock = [](const std::vector<double> &x) {
        double a = 1 - x[0], b = x[1] - x[0] * x[0];
        return a * a + 100 * b * b;
    };
    NelderMeadOptions opts;
    opts.max_iters = 5000;
    NelderMeadResult rb = nelder_mead(rosenbrock, {-1.2, 1.0}, opts);
    CHECK(rb.f < 1e-8);
}

TEST_CASE("simplex projection") {
    auto p1 = project_to_simplex({0.2, 0.3, 0.5});
    CHECK(p1[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(p1[2] == doctest::Approx(0.5).epsilon(1e-12));

    auto p2 = project_to_simplex({2.0, -1.0, 0.0});
    double sum = 0;
    for (double v : p2) {
        CHECK(v >= 0);
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p2[0] == doctest::Approx(1.0));

    // Idempotence.
    auto p3 = project_to_simplex(p2);
    for (size_t i = 0; i < 3; i++) {
        CHECK(p3[i] == doctest::Approx(p2[i]).epsilon(1e-12));
    }
}

TEST_CASE("exact dephasing match") {
    MixtureChannel id = exact_dephasing_match(0.0, {0, 0, 1});
    CHECK(id.probs[0] == doctest::Approx(1.0));

    MixtureChannel z = exact_dephasing_match(0.02, {0, 0, 1});
    CHECK(z.probs[1] == doctest::Approx(std::sin(0.01)).epsilon(1e-12));
    CHECK(max_abs(z.ops[1] - pauli(3)) < 1e-12);

    double theta = 2.0 * std::asin(std::sqrt(0.1));
    double inv = 1.0 / std::sqrt(2.0);
    MixtureChannel h = exact_dephasing_match(theta, {inv, 0, inv});
    CHECK(h.probs[1] == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));

    CHECK_THROWS_AS(exact_dephasing_match(0.1, {1, 1, 0}), BadAxisError);
}

TEST_CASE("approximation of a pauli channel is exact") {
    QuantumChannel dep = make_depolarizing(0.01);
    OptimizerOptions opts;
    opts.restarts = 2;
    ApproximationResult res = approximate_pauli(dep, opts);
    CHECK(res.diamond_dist <= 1e-6);
    CHECK(res.chi_diag[0] == doctest::Approx(0.97).epsilon(1e-6));
    CHECK(res.certificate.pass);
}

TEST_CASE("approximation of identity returns the identity mixture") {
    QuantumChannel id = QuantumChannel::from_kraus(1, {ComplexMatrix::identity(2)});
    OptimizerOptions opts;
    opts.restarts = 1;
    ApproximationResult res = approximate_pauli(id, opts);
    CHECK(res.diamond_dist == 0.0);
    CHECK(res.mixture.probs[0] == doctest::Approx(1.0));
}

TEST_CASE("idempotence on a generic honest pauli channel") {
    std::vector<ComplexMatrix> kraus;
    std::vector<double> probs = {0.95, 0.02, 0.02, 0.01};
    for (int i = 0; i < 4; i++) {
        kraus.push_back(std::sqrt(probs[i]) * pauli(i));
    }
    QuantumChannel ch = QuantumChannel::from_kraus(1, std::move(kraus));
    OptimizerOptions opts;
    opts.restarts = 2;
    ApproximationResult res = approximate_pauli(ch, opts);
    CHECK(res.diamond_dist <= 1e-6);
    for (int i = 0; i < 4; i++) {
        CHECK(res.chi_diag[i] == doctest::Approx(probs[i]).epsilon(1e-5));
    }
}

TEST_CASE("mixture channel validation") {
    MixtureChannel bad;
    bad.ops = {ComplexMatrix::identity(2)};
    bad.probs = {0.9};
    CHECK_THROWS_AS(bad.to_channel(1), BadProbabilityError);

    MixtureChannel neg;
    neg.ops = {ComplexMatrix::identity(2), pauli(3)};
    neg.probs = {1.2, -0.2};
    CHECK_THROWS_AS(neg.to_channel(1), BadProbabilityError);
}

TEST_CASE("mixing set validation") {
    QuantumChannel dep = make_depolarizing(0.01);
    OptimizerOptions opts;
    opts.restarts = 1;
    CHECK_THROWS_AS(approximate(dep, {}, opts), InvalidChannelError);
    // Set without the identity in front.
    CHECK_THROWS_AS(approximate(dep, {pauli(3), pauli(0)}, opts), InvalidChannelError);
}

TEST_CASE("two qubit sparse support validation") {
    QuantumChannel xx = make_collective_xx(0.02);
    OptimizerOptions opts;
    opts.restarts = 1;
    CHECK_THROWS_AS(approximate_two_qubit_sparse(xx, {"xx"}, opts), InvalidChannelError);
    CHECK_THROWS_AS(
        approximate_two_qubit_sparse(make_depolarizing(0.01), {"ii", "xx"}, opts),
        DimensionMismatchError);
}
