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

/// Constructors for the channel presets used throughout the tool, plus the
/// non-unital amplitude-damping demonstration channel.

#ifndef HONESTQ_PRESETS_HPP
#define HONESTQ_PRESETS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "honestq/channel.hpp"

namespace honestq {

/// rho -> (1-p) rho + p (n.sigma) rho (n.sigma).
QuantumChannel make_dephase_axis(double p, const std::array<double, 3> &axis);

/// rho -> (1-3p) rho + p sum_i sigma_i rho sigma_i.
QuantumChannel make_depolarizing(double p);

/// Unitary rotation by theta about a unit axis.
QuantumChannel make_rotation(double theta, const std::array<double, 3> &axis);

/// rho -> (1-p) rho + p Z rho Z.
QuantumChannel make_dephasing_z(double p);

/// rho -> (1-p) rho + p H rho H.
QuantumChannel make_hadamard_mixture(double p);

/// Two-qubit unitary exp(-i (theta/2) X(x)X).
QuantumChannel make_collective_xx(double theta);

/// Standard two-Kraus amplitude damping; Bloch map M = diag(sqrt(1-g), sqrt(1-g), 1-g),
/// t = (0, 0, g).
QuantumChannel make_amplitude_damping(double gamma);

/// Named preset with scalar params plus an optional axis vector; mirrors the
/// CLI channel file schema.
struct PresetSpec {
    std::string name;
    std::map<std::string, double> params;
    std::array<double, 3> axis{0, 0, 1};
    bool has_axis = false;
};

QuantumChannel make_channel(const PresetSpec &spec);

struct NamedChannel {
    std::string label;
    QuantumChannel channel;
};

/// The default parameter bundle (p = 0.01, theta = 0.02, axis angles k pi/8):
/// dephase-axis, depolarizing, and the five rotations.
std::vector<NamedChannel> paper_defaults();

/// Rotation bundle at the larger visualization angle theta = 2 asin(sqrt(0.1)),
/// axes j pi/8 for j = 0, 1, 2.
std::vector<NamedChannel> fig1_defaults();

/// Rotation axis (sin(k pi/8), 0, cos(k pi/8)).
std::array<double, 3> rotation_axis(int k);

}  // namespace honestq

#endif
