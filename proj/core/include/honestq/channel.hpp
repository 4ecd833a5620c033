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

/// Quantum channel data model and lossless conversions among Kraus, Choi,
/// chi-matrix (Pauli basis), Pauli transfer matrix, and Bloch affine map
/// representations, plus CPTP validation and fidelity reporting.
///
/// Conventions: the Pauli basis is ordered lexicographically (I, X, Y, Z per
/// qubit, most significant qubit first); Bloch vectors use
/// rho = (I + r.sigma)/2, so pure states have |r| = 1; the Choi matrix is
/// J = sum_ij |i><j| (x) Lambda(|i><j|) with the input factor first.

#ifndef HONESTQ_CHANNEL_HPP
#define HONESTQ_CHANNEL_HPP

#include <array>
#include <vector>

#include "honestq/matrix.hpp"

namespace honestq {

/// Trace-preservation defect beyond this is rejected.
inline constexpr double kTracePreservationTol = 1e-9;

/// Channels with Bloch translation below this count as unital.
inline constexpr double kUnitalTol = 1e-9;

/// CPTP map stored as a Kraus operator list; the canonical ingest form.
struct QuantumChannel {
    int n_qubits = 0;
    std::vector<ComplexMatrix> kraus;

    /// Validating constructor: throws InvalidChannelError when the list is
    /// empty, shapes disagree, or trace preservation fails beyond tolerance.
    static QuantumChannel from_kraus(int n_qubits, std::vector<ComplexMatrix> kraus);

    size_t dim() const {
        return size_t{1} << n_qubits;
    }
};

/// Process matrix in the n-qubit Pauli basis.
struct ChiMatrix {
    int n_qubits = 0;
    ComplexMatrix chi;  // 4^n x 4^n
};

/// R_ij = tr(sigma_i Lambda(sigma_j)) / 2^n.
struct PauliTransferMatrix {
    int n_qubits = 0;
    RealMatrix r;  // 4^n x 4^n
};

/// Affine action r -> M r + t on (generalized) Bloch vectors.
struct BlochAffineMap {
    RealMatrix m;           // (4^n - 1) square
    std::vector<double> t;  // matching dimension

    double translation_norm() const;
};

struct DensityMatrix {
    int n_qubits = 0;
    ComplexMatrix rho;

    static DensityMatrix from_state_vector(int n_qubits, const std::vector<cplx> &psi);
    static DensityMatrix from_bloch(const std::array<double, 3> &r);

    /// r_i = Re tr(rho sigma_i), single qubit only.
    std::array<double, 3> bloch_vector() const;
};

/// Lambda(rho) = sum_k K rho K^dag.
ComplexMatrix apply_channel(const QuantumChannel &ch, const ComplexMatrix &rho);

ComplexMatrix kraus_to_choi(const QuantumChannel &ch);
ChiMatrix kraus_to_chi(const QuantumChannel &ch);
ChiMatrix choi_to_chi(int n_qubits, const ComplexMatrix &choi);
ComplexMatrix chi_to_choi(const ChiMatrix &chi);

/// Kraus gauge fixed by ascending-eigenvalue order with the first nonzero
/// entry of each operator made real positive, so output is deterministic.
QuantumChannel chi_to_kraus(const ChiMatrix &chi);

PauliTransferMatrix chi_to_ptm(const ChiMatrix &chi);
ChiMatrix ptm_to_chi(const PauliTransferMatrix &ptm);
PauliTransferMatrix kraus_to_ptm(const QuantumChannel &ch);

/// Lower-right block and first column of a trace-preserving PTM.
BlochAffineMap ptm_to_bloch(const PauliTransferMatrix &ptm);
BlochAffineMap kraus_to_bloch(const QuantumChannel &ch);

/// (d chi00 + 1) / (d + 1).
double average_fidelity(const ChiMatrix &chi);

struct CptpReport {
    double tp_defect = 0;       // ||sum K^dag K - I||_max
    double choi_min_eig = 0;    // negative means not CP
    bool pass = false;
};

CptpReport validate_cptp(const QuantumChannel &ch);

}  // namespace honestq

#endif
