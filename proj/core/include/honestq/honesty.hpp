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

/// Honesty constraint machinery: input-output distinguishability, the
/// quadratic-form matrices A and B (unital and non-unital), PSD certificates,
/// and sampled-state empirical checks.
///
/// An approximation is honest when its input-output distinguishability
/// ||(Lambda_A - I)(rho)||_1 dominates the true channel's for every state.
/// For single-qubit maps this reduces to A >= B on Bloch vectors; for more
/// qubits the reduction is conjectural and certificates say so.

#ifndef HONESTQ_HONESTY_HPP
#define HONESTQ_HONESTY_HPP

#include <cstdint>

#include "honestq/channel.hpp"

namespace honestq {

inline constexpr double kCertificateTol = 1e-9;

enum class HonestyMode {
    unital,
    non_unital,
    multi_qubit_conjectural,
};

struct HonestyCertificate {
    RealMatrix a;
    RealMatrix b;
    double min_eig_a_minus_b = 0;
    double tol = kCertificateTol;
    bool pass = false;
    HonestyMode mode = HonestyMode::unital;
};

/// ||Lambda(rho) - rho||_1.
double io_distinguishability(const QuantumChannel &ch, const DensityMatrix &rho);

/// A := (I - M_A)^T (I - M_A); symmetric PSD by construction.
RealMatrix build_A(const RealMatrix &m_a);

/// B := (I - M_Lambda)^T (I - M_Lambda); requires a unital channel.
RealMatrix build_B_unital(const QuantumChannel &ch);

/// B := (I - M_Lambda)^T (I - M_Lambda) + (||t||^2 + 2||v||) I with
/// v = (I - M_Lambda)^T t; reduces to the unital form when t = 0.
RealMatrix build_B_nonunital(const QuantumChannel &ch);

/// Certificate for min-eig(A - B) >= -tol, with A from the candidate Bloch
/// matrix and B from the channel (non-unital correction applied when needed).
HonestyCertificate certify(const RealMatrix &m_a, const QuantumChannel &ch, double tol = kCertificateTol);

struct HonestyReport {
    /// Max over samples of ||(Lambda - I) rho||_1 - ||(Lambda_A - I) rho||_1;
    /// positive means the approximation under-reports.
    double max_violation = 0;
    DensityMatrix worst_state;
    size_t n_samples = 0;
    uint64_t seed = 0;
};

/// Direct check of the honesty inequality on Haar-random pure states plus a
/// fixed grid of Pauli eigenstates. Deterministic given the seed.
HonestyReport empirical_honesty_check(
    const QuantumChannel &approx, const QuantumChannel &ch, size_t n_samples, uint64_t seed);

/// Seeded Haar-random pure state on n qubits.
DensityMatrix haar_random_pure_state(int n_qubits, uint64_t &rng_state);

/// splitmix64 step; used to derive independent deterministic substreams.
uint64_t split_seed(uint64_t seed, uint64_t stream);

}  // namespace honestq

#endif
