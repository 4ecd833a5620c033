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

/// Honest-approximation optimizer: search over probability mixtures of a
/// fixed unitary set for the mixture closest to a target channel in diamond
/// distance, subject to the honesty certificate.
///
/// The search is a seeded multi-start Nelder-Mead over simplex-projected
/// probabilities with an exact penalty on certificate violation, followed by
/// a bisection step that lands the result on the honesty boundary.

#ifndef HONESTQ_APPROXIMATE_HPP
#define HONESTQ_APPROXIMATE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "honestq/channel.hpp"
#include "honestq/honesty.hpp"

namespace honestq {

struct OptimizerOptions {
    uint64_t seed = 1;
    int restarts = 16;
    int max_iters = 2000;
    double penalty_weight = 1e3;
    /// Diamond-distance window treated as a tie when maximizing chi00 over
    /// the near-optimal set; the degenerate valleys are flat to about 1e-5.
    double tie_break_window = 1e-5;
    /// Sample count for the empirical check attached to multi-qubit results.
    size_t empirical_samples = 10000;
};

struct MixtureChannel {
    std::vector<ComplexMatrix> ops;
    std::vector<double> probs;

    /// Kraus form sqrt(p_i) U_i; zero-probability ops are dropped.
    QuantumChannel to_channel(int n_qubits) const;
};

struct RestartTrace {
    int restart = 0;
    double objective = 0;      // diamond + penalty at the restart's best point
    double diamond = 0;
    double cert_min_eig = 0;
    int iterations = 0;
    bool feasible = false;
};

struct ApproximationResult {
    MixtureChannel mixture;
    std::vector<double> chi_diag;
    double diamond_dist = 0;
    HonestyCertificate certificate;
    std::vector<RestartTrace> trace;
    /// Present for multi-qubit results, where the certificate is conjectural.
    bool has_empirical = false;
    HonestyReport empirical;
};

/// Minimize ||mixture - ch||_diamond over honest mixtures of mixing_set.
/// The set must contain the identity. Deterministic given opts.seed.
ApproximationResult approximate(
    const QuantumChannel &ch,
    const std::vector<ComplexMatrix> &mixing_set,
    const OptimizerOptions &opts = {});

/// approximate() over the n-qubit Pauli group representatives.
ApproximationResult approximate_pauli(const QuantumChannel &ch, const OptimizerOptions &opts = {});

/// approximate() over two-qubit Paulis restricted to the given labels
/// (e.g. {"ii", "xx"}); "ii" must be included.
ApproximationResult approximate_two_qubit_sparse(
    const QuantumChannel &ch,
    const std::vector<std::string> &support,
    const OptimizerOptions &opts = {});

/// Dephasing mixture (1-p) I + p (n.sigma) with p = |sin(theta/2)|, which
/// matches the input-output distinguishability of the rotation by theta
/// about the same axis on every state.
MixtureChannel exact_dephasing_match(double theta, const std::array<double, 3> &axis);

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(const std::vector<double> &x);

}  // namespace honestq

#endif
