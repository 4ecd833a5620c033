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

#ifndef HONESTQ_TESTS_TEST_HELPERS_HPP
#define HONESTQ_TESTS_TEST_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "honestq/channel.hpp"
#include "honestq/matrix.hpp"

namespace honestq::testing {

inline uint64_t next_u64(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform(uint64_t &state) {
    return static_cast<double>(next_u64(state) >> 11) * 0x1.0p-53;
}

inline double gauss(uint64_t &state) {
    double u1 = uniform(state), u2 = uniform(state);
    if (u1 < 1e-300) {
        u1 = 1e-300;
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline ComplexMatrix random_matrix(size_t rows, size_t cols, uint64_t &state) {
    ComplexMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m(r, c) = cplx(gauss(state), gauss(state));
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(size_t dim, uint64_t &state) {
    ComplexMatrix g = random_matrix(dim, dim, state);
    return 0.5 * (g + dagger(g));
}

/// Haar-random unitary via Gram-Schmidt on a Ginibre matrix.
inline ComplexMatrix random_unitary(size_t dim, uint64_t &state) {
    ComplexMatrix g = random_matrix(dim, dim, state);
    for (size_t c = 0; c < dim; c++) {
        for (size_t prev = 0; prev < c; prev++) {
            cplx dot(0, 0);
            for (size_t r = 0; r < dim; r++) {
                dot += std::conj(g(r, prev)) * g(r, c);
            }
            for (size_t r = 0; r < dim; r++) {
                g(r, c) -= dot * g(r, prev);
            }
        }
        double norm = 0;
        for (size_t r = 0; r < dim; r++) {
            norm += std::norm(g(r, c));
        }
        norm = std::sqrt(norm);
        for (size_t r = 0; r < dim; r++) {
            g(r, c) /= norm;
        }
    }
    return g;
}

/// Random CPTP channel: mixture of Haar unitaries with random weights.
inline QuantumChannel random_unitary_mixture(int n_qubits, int n_ops, uint64_t &state) {
    size_t d = size_t{1} << n_qubits;
    std::vector<double> w(n_ops);
    double total = 0;
    for (auto &v : w) {
        v = uniform(state) + 0.05;
        total += v;
    }
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < n_ops; i++) {
        kraus.push_back(std::sqrt(w[i] / total) * random_unitary(d, state));
    }
    return QuantumChannel::from_kraus(n_qubits, std::move(kraus));
}

inline DensityMatrix random_pure_state(int n_qubits, uint64_t &state) {
    size_t d = size_t{1} << n_qubits;
    std::vector<cplx> psi(d);
    double norm = 0;
    for (auto &a : psi) {
        a = cplx(gauss(state), gauss(state));
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto &a : psi) {
        a /= norm;
    }
    return DensityMatrix::from_state_vector(n_qubits, psi);
}

}  // namespace honestq::testing

#endif
