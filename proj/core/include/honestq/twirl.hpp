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

#ifndef HONESTQ_TWIRL_HPP
#define HONESTQ_TWIRL_HPP

#include <cstdint>

#include "honestq/channel.hpp"

namespace honestq {

/// Pauli twirl: zeroes the off-diagonal chi-matrix elements, keeping the
/// diagonal exactly. Equivalent to the group average
/// (1/4^n) sum_P P^dag Lambda(P rho P^dag) P.
QuantumChannel pauli_twirl(const QuantumChannel &ch);

/// Max over sampled states of the trace-norm gap between the group-average
/// twirl and the chi-diagonal twirl; validates the two definitions agree.
double twirl_equivalence_check(const QuantumChannel &ch, size_t n_samples, uint64_t seed);

}  // namespace honestq

#endif
