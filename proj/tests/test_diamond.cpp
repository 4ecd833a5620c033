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
#include "honestq/diamond.hpp"
#include "honestq/pauli.hpp"
#include "honestq/presets.hpp"
#include "honestq/sdp.hpp"
#include "test_helpers.hpp"

using namespace honestq;

namespace {

QuantumChannel identity_channel(int n_qubits) {
    return QuantumChannel::from_kraus(
        n_qubits, {ComplexMatrix::identity(size_t{1} << n_qubits)});
}

QuantumChannel pauli_channel(const std::vector<double> &probs) {
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < 4; i++) {
        if (probs[i] > 0) {
            kraus.push_back(std::sqrt(probs[i]) * pauli(i));
        }
    }
    return QuantumChannel::from_kraus(1, std::move(kraus));
}

}  // namespace

TEST_CASE("small sdp with known optimum") {
    // maximize <C, X> with tr X = 1, X >= 0: the top eigenvalue of C.
    SdpProblem p;
    p.block_dims = {3};
    ComplexMatrix c(3, 3);
    c(0, 0) = 1.0;
    c(1, 1) = 5.0;
    c(2, 2) = 2.0;
    c(0, 2) = cplx(0, 1);
    c(2, 0) = cplx(0, -1);
    p.objective = {c};
    SdpConstraint con;
    for (size_t i = 0; i < 3; i++) {
        con.terms.push_back({0, i, i, 1.0});
    }
    con.rhs = 1;
    p.constraints.push_back(con);

    SdpResult res = solve_sdp(p);
    REQUIRE(res.info.status == SdpStatus::optimal);
    EigResult ref = eig_hermitian(c);
    CHECK(res.info.primal == doctest::Approx(ref.eigenvalues.back()).epsilon(1e-7));
    CHECK(res.info.gap < 1e-7);
}

TEST_CASE("diamond distance of a channel to itself is zero") {
    QuantumChannel ch = make_dephase_axis(0.02, rotation_axis(1));
    CHECK(diamond_distance(ch, ch).value == doctest::Approx(0.0));
}

TEST_CASE("rotation vs identity closed form") {
    uint64_t st = 77;
    for (int trial = 0; trial < 6; trial++) {
        double theta = 0.05 + 3.0 * honestq::testing::uniform(st);
        auto axis = rotation_axis(trial % 5);
        double got = diamond_distance(make_rotation(theta, axis), identity_channel(1)).value;
        CHECK(got == doctest::Approx(2.0 * std::abs(std::sin(theta / 2))).epsilon(1e-6));
    }
}

TEST_CASE("pauli channel pairs have l1 diamond distance") {
    std::vector<double> p = {0.9, 0.05, 0.03, 0.02};
    std::vector<double> q = {0.85, 0.05, 0.06, 0.04};
    double expected = 0;
    for (int i = 0; i < 4; i++) {
        expected += std::abs(p[i] - q[i]);
    }
    double got = diamond_distance(pauli_channel(p), pauli_channel(q)).value;
    CHECK(got == doctest::Approx(expected).epsilon(1e-7));
}

TEST_CASE("diamond distance is symmetric and unitarily invariant") {
    QuantumChannel a = make_dephasing_z(0.1);
    QuantumChannel b = make_depolarizing(0.02);
    double ab = diamond_distance(a, b).value;
    double ba = diamond_distance(b, a).value;
    CHECK(ab == doctest::Approx(ba).epsilon(1e-7));

    // Conjugating both channels by the same unitary preserves the distance.
    uint64_t st = 3;
    ComplexMatrix u = honestq::testing::random_unitary(2, st);
    auto conjugate = [&](const QuantumChannel &ch) {
        std::vector<ComplexMatrix> kraus;
        for (const auto &k : ch.kraus) {
            kraus.push_back(u * k * dagger(u));
        }
        return QuantumChannel::from_kraus(ch.n_qubits, std::move(kraus));
    };
    double conj = diamond_distance(conjugate(a), conjugate(b)).value;
    CHECK(conj == doctest::Approx(ab).epsilon(1e-7));
}

TEST_CASE("lower bound brackets the sdp value") {
    struct Pair {
        QuantumChannel a, b;
    };
    std::vector<Pair> pairs = {
        {make_rotation(0.02, rotation_axis(0)), identity_channel(1)},
        {make_dephase_axis(0.01, rotation_axis(1)), make_depolarizing(0.01)},
        {make_dephasing_z(0.2), make_dephasing_z(0.05)},
    };
    for (const auto &[a, b] : pairs) {
        double sdp = diamond_distance(a, b).value;
        double lb = diamond_lower_bound(a, b, 16, 1);
        CHECK(lb <= sdp + 1e-8);
        CHECK(sdp - lb <= 1e-4);
    }
}

TEST_CASE("two-qubit diamond distance") {
    QuantumChannel xx = make_collective_xx(0.02);
    double got = diamond_distance(xx, identity_channel(2)).value;
    CHECK(got == doctest::Approx(2.0 * std::abs(std::sin(0.01))).epsilon(1e-6));
    double lb = diamond_lower_bound(xx, identity_channel(2), 2, 1);
    CHECK(lb <= got + 1e-8);
    CHECK(got - lb <= 1e-4);
}

TEST_CASE("solver failure is loud") {
    QuantumChannel a = make_dephasing_z(0.3);
    CHECK_THROWS_AS(diamond_distance(a, identity_channel(1), 1e-8, 1), SolverFailure);
}

TEST_CASE("duality gap within tolerance on preset distances") {
    for (const auto &nc : paper_defaults()) {
        DiamondResult res = diamond_distance(nc.channel, identity_channel(1));
        CHECK(res.sdp.gap <= 1e-8);
    }
}
