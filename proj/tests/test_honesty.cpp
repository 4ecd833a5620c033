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
#include "honestq/honesty.hpp"
#include "honestq/presets.hpp"
#include "test_helpers.hpp"

using namespace honestq;

TEST_CASE("io distinguishability closed forms for rotation and dephasing") {
    for (double theta : {0.02, 0.4, 1.1}) {
        for (double alpha : {0.2, 0.9, M_PI / 2}) {
            DensityMatrix rho = DensityMatrix::from_bloch(
                {std::sin(alpha), 0.0, std::cos(alpha)});

            double rot = io_distinguishability(make_rotation(theta, {0, 0, 1}), rho);
            CHECK(rot == doctest::Approx(2.0 * std::abs(std::sin(theta / 2)) *
                                         std::abs(std::sin(alpha)))
                             .epsilon(1e-10));

            double p = 0.5 * theta / M_PI;  // any probability works here
            double deph = io_distinguishability(make_dephasing_z(p), rho);
            CHECK(deph == doctest::Approx(2.0 * p * std::abs(std::sin(alpha))).epsilon(1e-10));
        }
    }
}

TEST_CASE("unital B matrix matches its definition") {
    QuantumChannel ch = make_dephasing_z(0.07);
    RealMatrix b = build_B_unital(ch);
    RealMatrix m = kraus_to_bloch(ch).m;
    RealMatrix direct = transpose(RealMatrix::identity(3) - m) * (RealMatrix::identity(3) - m);
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            CHECK(b(r, c) == doctest::Approx(direct(r, c)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(build_B_unital(make_amplitude_damping(0.1)), NotUnitalError);
}

TEST_CASE("non-unital B reduces to unital form when t vanishes") {
    QuantumChannel ch = make_dephasing_z(0.07);
    RealMatrix bu = build_B_unital(ch);
    RealMatrix bn = build_B_nonunital(ch);
    for (size_t r = 0; r < 3; r++) {
        for (size_t c = 0; c < 3; c++) {
            CHECK(bn(r, c) == doctest::Approx(bu(r, c)).epsilon(1e-9));
        }
    }
}

TEST_CASE("certificate for dephasing approximations of a rotation") {
    double theta = 0.02;
    QuantumChannel rot = make_rotation(theta, {0, 0, 1});
    auto dephasing_m = [](double p) {
        return kraus_to_bloch(make_dephasing_z(p)).m;
    };

    double p_star = std::abs(std::sin(theta / 2));

    // Exactly at the boundary: min eigenvalue is zero.
    HonestyCertificate at = certify(dephasing_m(p_star), rot);
    CHECK(at.pass);
    CHECK(std::abs(at.min_eig_a_minus_b) < 1e-9);

    // More dephasing is honest, less is not.
    CHECK(certify(dephasing_m(2 * p_star), rot).pass);
    HonestyCertificate under = certify(dephasing_m(0.5 * p_star), rot);
    CHECK_FALSE(under.pass);
    CHECK(under.min_eig_a_minus_b < -1e-6);
}

TEST_CASE("empirical check finds dephasing underestimation") {
    QuantumChannel rot = make_rotation(0.02, {0, 0, 1});
    QuantumChannel weak = make_dephasing_z(0.001);
    HonestyReport rep = empirical_honesty_check(weak, rot, 3000, 5);
    CHECK(rep.max_violation > 1e-3);

    // The witness reproduces the violation when replayed.
    double truth = io_distinguishability(rot, rep.worst_state);
    double approx = io_distinguishability(weak, rep.worst_state);
    CHECK(truth - approx == doctest::Approx(rep.max_violation).epsilon(1e-12));
}

TEST_CASE("empirical check is deterministic in the seed") {
    QuantumChannel rot = make_rotation(0.3, rotation_axis(1));
    QuantumChannel deph = make_dephasing_z(0.05);
    HonestyReport a = empirical_honesty_check(deph, rot, 500, 123);
    HonestyReport b = empirical_honesty_check(deph, rot, 500, 123);
    CHECK(a.max_violation == b.max_violation);
    HonestyReport c = empirical_honesty_check(deph, rot, 500, 124);
    CHECK(a.max_violation != c.max_violation);
}

TEST_CASE("haar samples are valid states") {
    uint64_t st = 55;
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 20; trial++) {
            DensityMatrix rho = haar_random_pure_state(n, st);
            CHECK(std::abs(trace(rho.rho).real() - 1.0) < 1e-12);
            CHECK(rho.rho.hermiticity_defect() < 1e-12);
            // Purity 1.
            CHECK(std::abs(trace(rho.rho * rho.rho).real() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("channel against itself is honest everywhere") {
    QuantumChannel ch = make_dephase_axis(0.03, rotation_axis(1));
    HonestyCertificate cert = certify(kraus_to_bloch(ch).m, ch);
    CHECK(cert.pass);
    CHECK(std::abs(cert.min_eig_a_minus_b) < 1e-12);
    HonestyReport rep = empirical_honesty_check(ch, ch, 500, 9);
    CHECK(rep.max_violation <= 0);
}
