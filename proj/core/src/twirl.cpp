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

#include "honestq/twirl.hpp"

#include <cmath>

#include "honestq/honesty.hpp"
#include "honestq/pauli.hpp"

namespace honestq {

QuantumChannel pauli_twirl(const QuantumChannel &ch) {
    ChiMatrix chi = kraus_to_chi(ch);
    size_t m = chi.chi.rows();
    const auto &basis = pauli_basis(ch.n_qubits);

    QuantumChannel out;
    out.n_qubits = ch.n_qubits;
    for (size_t i = 0; i < m; i++) {
        double w = chi.chi(i, i).real();
        if (w <= 1e-15) {
            continue;
        }
        out.kraus.push_back(std::sqrt(w) * basis[i]);
    }
    return QuantumChannel::from_kraus(out.n_qubits, out.kraus);
}

double twirl_equivalence_check(const QuantumChannel &ch, size_t n_samples, uint64_t seed) {
    QuantumChannel diag = pauli_twirl(ch);
    const auto &basis = pauli_basis(ch.n_qubits);
    size_t m = basis.size();
    double inv_m = 1.0 / static_cast<double>(m);

    double worst = 0;
    for (size_t s = 0; s < n_samples; s++) {
        uint64_t st = split_seed(seed, s);
        DensityMatrix psi = haar_random_pure_state(ch.n_qubits, st);

        // Group-average definition of the twirl.
        ComplexMatrix avg(ch.dim(), ch.dim());
        for (size_t g = 0; g < m; g++) {
            ComplexMatrix conj_in = basis[g] * psi.rho * basis[g];
            avg = avg + inv_m * (basis[g] * apply_channel(ch, conj_in) * basis[g]);
        }

        ComplexMatrix gap = avg - apply_channel(diag, psi.rho);
        worst = std::max(worst, trace_norm(gap));
    }
    return worst;
}

}  // namespace honestq
