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
#include "honestq/channel.hpp"
#include "honestq/pauli.hpp"
#include "honestq/presets.hpp"
#include "test_helpers.hpp"

using namespace honestq;
using honestq::testing::random_pure_state;
using honestq::testing::random_unitary_mixture;

TEST_CASE("pauli basis labels and orthogonality") {
    CHECK(pauli_label(1, 0) == "i");
    CHECK(pauli_label(2, 5) == "xx");
    CHECK(pauli_index(2, "xx") == 5);
    CHECK(pauli_index(1, "Z") == 3);
    CHECK_THROWS_AS(pauli_index(1, "q"), ParseError);

    for (int n : {1, 2}) {
        const auto &basis = pauli_basis(n);
        double d = std::pow(2.0, n);
        for (size_t a = 0; a < basis.size(); a++) {
            for (size_t b = 0; b < basis.size(); b++) {
                double expected = a == b ? d : 0.0;
                CHECK(std::abs(trace(basis[a] * basis[b]) - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("axis_dot_sigma is Hermitian unitary") {
    std::array<double, 3> axis{std::sin(0.3), 0.2, std::cos(0.3)};
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    for (auto &v : axis) {
        v /= n;
    }
    ComplexMatrix m = axis_dot_sigma(axis);
    CHECK(m.hermiticity_defect() < 1e-12);
    CHECK(max_abs(m * m - ComplexMatrix::identity(2)) < 1e-12);
}

TEST_CASE("channel representation round-trips") {
    uint64_t st = 7;
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 4; trial++) {
            QuantumChannel ch = random_unitary_mixture(n, 3, st);

            ChiMatrix chi = kraus_to_chi(ch);
            ComplexMatrix choi = kraus_to_choi(ch);

            // chi <-> choi
            CHECK(max_abs(chi_to_choi(chi) - choi) < 1e-10);
            CHECK(max_abs(choi_to_chi(n, choi).chi - chi.chi) < 1e-10);

            // chi -> kraus -> chi
            QuantumChannel back = chi_to_kraus(chi);
            CHECK(max_abs(kraus_to_chi(back).chi - chi.chi) < 1e-9);

            // chi <-> ptm
            PauliTransferMatrix ptm = chi_to_ptm(chi);
            CHECK(max_abs(ptm_to_chi(ptm).chi - chi.chi) < 1e-10);

            ComplexMatrix rho = random_pure_state(n, st).rho;
            ComplexMatrix out1 = apply_channel(ch, rho);
            ComplexMatrix out2 = apply_channel(back, rho);
            CHECK(max_abs(out1 - out2) < 1e-9);
        }
    }
}

TEST_CASE("ptm and bloch of dephasing") {
    double p = 0.13;
    PauliTransferMatrix ptm = kraus_to_ptm(make_dephasing_z(p));
    double expected[4] = {1.0, 1.0 - 2.0 * p, 1.0 - 2.0 * p, 1.0};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            CHECK(ptm.r(i, j) == doctest::Approx(i == j ? expected[i] : 0.0).epsilon(1e-12));
        }
    }
    BlochAffineMap bloch = kraus_to_bloch(make_dephasing_z(p));
    CHECK(bloch.translation_norm() < 1e-12);
}

TEST_CASE("rotation bloch map is the 3d rotation") {
    double theta = 0.02;
    BlochAffineMap bloch = kraus_to_bloch(make_rotation(theta, {0, 0, 1}));
    CHECK(bloch.m(0, 0) == doctest::Approx(std::cos(theta)).epsilon(1e-12));
    CHECK(bloch.m(1, 0) == doctest::Approx(std::sin(theta)).epsilon(1e-12));
    CHECK(bloch.m(0, 1) == doctest::Approx(-std::sin(theta)).epsilon(1e-12));
    CHECK(bloch.m(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("amplitude damping bloch affine map") {
    double g = 0.2;
    BlochAffineMap bloch = kraus_to_bloch(make_amplitude_damping(g));
    CHECK(bloch.m(0, 0) == doctest::Approx(std::sqrt(1 - g)).epsilon(1e-12));
    CHECK(bloch.m(1, 1) == doctest::Approx(std::sqrt(1 - g)).epsilon(1e-12));
    CHECK(bloch.m(2, 2) == doctest::Approx(1 - g).epsilon(1e-12));
    CHECK(bloch.t[0] == doctest::Approx(0.0));
    CHECK(bloch.t[1] == doctest::Approx(0.0));
    CHECK(bloch.t[2] == doctest::Approx(g).epsilon(1e-12));
}

TEST_CASE("average fidelity from chi00") {
    ChiMatrix chi = kraus_to_chi(make_depolarizing(0.01));
    CHECK(average_fidelity(chi) == doctest::Approx((2.0 * 0.97 + 1.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("state trace distance equals bloch distance") {
    // 10^4 random pairs, deviation at most 1e-10.
    uint64_t st = 99;
    double worst = 0;
    for (int trial = 0; trial < 10000; trial++) {
        double a1 = honestq::testing::uniform(st) * M_PI;
        double b1 = honestq::testing::uniform(st) * 2 * M_PI;
        double a2 = honestq::testing::uniform(st) * M_PI;
        double b2 = honestq::testing::uniform(st) * 2 * M_PI;
        double r1 = honestq::testing::uniform(st);
        double r2 = honestq::testing::uniform(st);
        std::array<double, 3> v1{r1 * std::sin(a1) * std::cos(b1),
                                 r1 * std::sin(a1) * std::sin(b1), r1 * std::cos(a1)};
        std::array<double, 3> v2{r2 * std::sin(a2) * std::cos(b2),
                                 r2 * std::sin(a2) * std::sin(b2), r2 * std::cos(a2)};
        DensityMatrix rho1 = DensityMatrix::from_bloch(v1);
        DensityMatrix rho2 = DensityMatrix::from_bloch(v2);
        double lhs = trace_norm(rho1.rho - rho2.rho);
        double rhs = std::sqrt((v1[0] - v2[0]) * (v1[0] - v2[0]) +
                               (v1[1] - v2[1]) * (v1[1] - v2[1]) +
                               (v1[2] - v2[2]) * (v1[2] - v2[2]));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("cptp validation") {
    CHECK(validate_cptp(make_depolarizing(0.05)).pass);
    CHECK(validate_cptp(make_amplitude_damping(0.3)).pass);

    // Trace-decreasing Kraus list must be rejected at construction.
    std::vector<ComplexMatrix> bad = {0.5 * ComplexMatrix::identity(2)};
    CHECK_THROWS_AS(QuantumChannel::from_kraus(1, bad), InvalidChannelError);
}

TEST_CASE("presets are unital except amplitude damping") {
    for (const auto &nc : paper_defaults()) {
        CHECK(validate_cptp(nc.channel).pass);
        CHECK(kraus_to_bloch(nc.channel).translation_norm() <= 1e-12);
    }
    CHECK(kraus_to_bloch(make_amplitude_damping(0.1)).translation_norm() > 0.09);
}

TEST_CASE("collective xx chi block") {
    ChiMatrix chi = kraus_to_chi(make_collective_xx(0.02));
    size_t xx = static_cast<size_t>(pauli_index(2, "xx"));
    CHECK(chi.chi(0, 0).real() == doctest::Approx(0.9999).epsilon(1e-4));
    CHECK(chi.chi(xx, xx).real() == doctest::Approx(0.0001).epsilon(1e-4));
    CHECK(chi.chi(0, xx).imag() == doctest::Approx(0.01).epsilon(1e-4));
    // All other entries vanish.
    double off = 0;
    for (size_t r = 0; r < 16; r++) {
        for (size_t c = 0; c < 16; c++) {
            if ((r == 0 || r == xx) && (c == 0 || c == xx)) {
                continue;
            }
            off = std::max(off, std::abs(chi.chi(r, c)));
        }
    }
    CHECK(off < 1e-12);
}

TEST_CASE("hadamard mixture fixes the diagonal axis") {
    double p = std::sqrt(0.1);
    BlochAffineMap bloch = kraus_to_bloch(make_hadamard_mixture(p));
    double inv = 1.0 / std::sqrt(2.0);
    // (1,0,1)/sqrt(2) is an eigenvector with eigenvalue 1.
    double x = bloch.m(0, 0) * inv + bloch.m(0, 2) * inv;
    double z = bloch.m(2, 0) * inv + bloch.m(2, 2) * inv;
    CHECK(x == doctest::Approx(inv).epsilon(1e-12));
    CHECK(z == doctest::Approx(inv).epsilon(1e-12));
}

TEST_CASE("rotation chi00 closed form") {
    ChiMatrix chi = kraus_to_chi(make_rotation(0.02, rotation_axis(2)));
    CHECK(chi.chi(0, 0).real() == doctest::Approx(std::cos(0.01) * std::cos(0.01)).epsilon(1e-12));
}

TEST_CASE("preset spec dispatch") {
    PresetSpec spec;
    spec.name = "depolarizing";
    spec.params["p"] = 0.02;
    QuantumChannel ch = make_channel(spec);
    CHECK(kraus_to_chi(ch).chi(0, 0).real() == doctest::Approx(0.94).epsilon(1e-12));

    PresetSpec bad;
    bad.name = "no-such-preset";
    CHECK_THROWS_AS(make_channel(bad), ParseError);
}
