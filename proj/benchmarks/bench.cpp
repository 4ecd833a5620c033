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

#include <benchmark/benchmark.h>

#include "honestq/diamond.hpp"
#include "honestq/matrix.hpp"
#include "honestq/presets.hpp"

namespace {

using namespace honestq;

QuantumChannel identity_channel(int n_qubits) {
    return QuantumChannel::from_kraus(
        n_qubits, {ComplexMatrix::identity(size_t{1} << n_qubits)});
}

void BM_DiamondOneQubit(benchmark::State &state) {
    QuantumChannel a = make_rotation(0.02, rotation_axis(1));
    QuantumChannel b = identity_channel(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diamond_distance(a, b).value);
    }
}
BENCHMARK(BM_DiamondOneQubit)->Unit(benchmark::kMillisecond);

void BM_DiamondTwoQubit(benchmark::State &state) {
    QuantumChannel a = make_collective_xx(0.02);
    QuantumChannel b = identity_channel(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diamond_distance(a, b).value);
    }
}
BENCHMARK(BM_DiamondTwoQubit)->Unit(benchmark::kMillisecond);

void BM_KrausToChi(benchmark::State &state) {
    QuantumChannel ch = make_collective_xx(0.02);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kraus_to_chi(ch));
    }
}
BENCHMARK(BM_KrausToChi)->Unit(benchmark::kMicrosecond);

void BM_EigHermitian16(benchmark::State &state) {
    // A fixed dense Hermitian 16x16 matrix, the size met in two-qubit work.
    ComplexMatrix m(16, 16);
    for (size_t r = 0; r < 16; r++) {
        for (size_t c = 0; c < 16; c++) {
            double re = std::cos(0.37 * (r * 16.0 + c)) / (1.0 + r + c);
            double im = std::sin(0.11 * (r * 17.0 + c));
            m(r, c) = cplx(re, r == c ? 0.0 : im);
        }
    }
    m = 0.5 * (m + dagger(m));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(m));
    }
}
BENCHMARK(BM_EigHermitian16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
