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

#include "honestq/presets.hpp"

#include <cmath>

#include "honestq/pauli.hpp"

namespace honestq {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw BadProbabilityError(std::string(what) + " must lie in [0, 1]");
    }
}

void check_axis(const std::array<double, 3> &axis) {
    double n2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
    if (std::abs(n2 - 1.0) > 2e-12) {
        throw BadAxisError("axis must be unit norm");
    }
}

double require_param(const PresetSpec &spec, const std::string &key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        throw ParseError("preset '" + spec.name + "' needs parameter '" + key + "'");
    }
    return it->second;
}

}  // namespace

QuantumChannel make_dephase_axis(double p, const std::array<double, 3> &axis) {
    check_probability(p, "p");
    check_axis(axis);
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - p) * ComplexMatrix::identity(2));
    kraus.push_back(std::sqrt(p) * axis_dot_sigma(axis));
    return QuantumChannel::from_kraus(1, std::move(kraus));
}

QuantumChannel make_depolarizing(double p) {
    if (!(p >= 0.0 && 3.0 * p <= 1.0)) {
        throw BadProbabilityError("depolarizing needs 0 <= 3p <= 1");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - 3.0 * p) * ComplexMatrix::identity(2));
    for (int i = 1; i <= 3; i++) {
        kraus.push_back(std::sqrt(p) * pauli(i));
    }
    return QuantumChannel::from_kraus(1, std::move(kraus));
}

QuantumChannel make_rotation(double theta, const std::array<double, 3> &axis) {
    check_axis(axis);
    double c = std::cos(theta / 2.0);
    double s = std::sin(theta / 2.0);
    ComplexMatrix u = c * ComplexMatrix::identity(2) + cplx(0, -s) * axis_dot_sigma(axis);
    return QuantumChannel::from_kraus(1, {u});
}

QuantumChannel make_dephasing_z(double p) {
    check_probability(p, "p");
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - p) * ComplexMatrix::identity(2));
    kraus.push_back(std::sqrt(p) * pauli(3));
    return QuantumChannel::from_kraus(1, std::move(kraus));
}

QuantumChannel make_hadamard_mixture(double p) {
    check_probability(p, "p");
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, 2);
    h(0, 0) = inv_sqrt2;
    h(0, 1) = inv_sqrt2;
    h(1, 0) = inv_sqrt2;
    h(1, 1) = -inv_sqrt2;
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - p) * ComplexMatrix::identity(2));
    kraus.push_back(std::sqrt(p) * h);
    return QuantumChannel::from_kraus(1, std::move(kraus));
}

QuantumChannel make_collective_xx(double theta) {
    ComplexMatrix xx = kron(pauli(1), pauli(1));
    double c = std::cos(theta / 2.0);
    double s = std::sin(theta / 2.0);
    // exp(-i (theta/2) XX) = cos(theta/2) I - i sin(theta/2) XX since (XX)^2 = I.
    ComplexMatrix u = c * ComplexMatrix::identity(4) + cplx(0, -s) * xx;
    return QuantumChannel::from_kraus(2, {u});
}

QuantumChannel make_amplitude_damping(double gamma) {
    check_probability(gamma, "gamma");
    ComplexMatrix k0(2, 2);
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    ComplexMatrix k1(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return QuantumChannel::from_kraus(1, {k0, k1});
}

QuantumChannel make_channel(const PresetSpec &spec) {
    if (spec.name == "dephase-axis") {
        if (!spec.has_axis) {
            throw ParseError("dephase-axis needs an axis");
        }
        return make_dephase_axis(require_param(spec, "p"), spec.axis);
    }
    if (spec.name == "depolarizing") {
        return make_depolarizing(require_param(spec, "p"));
    }
    if (spec.name == "rotation-axis") {
        if (!spec.has_axis) {
            throw ParseError("rotation-axis needs an axis");
        }
        return make_rotation(require_param(spec, "theta"), spec.axis);
    }
    if (spec.name == "dephasing-z") {
        return make_dephasing_z(require_param(spec, "p"));
    }
    if (spec.name == "hadamard-mixture") {
        return make_hadamard_mixture(require_param(spec, "p"));
    }
    if (spec.name == "collective-xx") {
        return make_collective_xx(require_param(spec, "theta"));
    }
    if (spec.name == "amplitude-damping") {
        return make_amplitude_damping(require_param(spec, "gamma"));
    }
    throw ParseError("unknown preset '" + spec.name + "'");
}

std::array<double, 3> rotation_axis(int k) {
    double a = k * M_PI / 8.0;
    return {std::sin(a), 0.0, std::cos(a)};
}

std::vector<NamedChannel> paper_defaults() {
    const double p = 0.01;
    const double theta = 0.02;
    std::vector<NamedChannel> out;
    out.push_back({"dephase-axis", make_dephase_axis(p, rotation_axis(1))});
    out.push_back({"depolarizing", make_depolarizing(p)});
    for (int k = 0; k <= 4; k++) {
        out.push_back({"rotation-" + std::to_string(k), make_rotation(theta, rotation_axis(k))});
    }
    return out;
}

std::vector<NamedChannel> fig1_defaults() {
    double theta = 2.0 * std::asin(std::sqrt(0.1));
    std::vector<NamedChannel> out;
    for (int j = 0; j <= 2; j++) {
        out.push_back({"rotation-" + std::to_string(j), make_rotation(theta, rotation_axis(j))});
    }
    return out;
}

}  // namespace honestq
