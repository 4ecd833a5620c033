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

/// Diamond-norm distance between channels via a semidefinite program, with an
/// independent sampling lower bound for cross-validation.
///
/// The SDP maximizes 2 tr(J W) over 0 <= W <= rho (x) I with rho a density
/// matrix on the input factor, where J is the Choi matrix of the
/// Hermiticity-preserving difference map.

#ifndef HONESTQ_DIAMOND_HPP
#define HONESTQ_DIAMOND_HPP

#include <cstdint>

#include "honestq/channel.hpp"
#include "honestq/sdp.hpp"

namespace honestq {

inline constexpr double kDiamondGapTol = 1e-8;
inline constexpr int kDiamondMaxIter = 200;

struct DiamondResult {
    double value = 0;
    SdpSolution sdp;
};

/// ||ch1 - ch2||_diamond. Throws SolverFailure when the duality gap cannot be
/// closed; never clamps silently.
DiamondResult diamond_distance(
    const QuantumChannel &ch1,
    const QuantumChannel &ch2,
    double gap_tol = kDiamondGapTol,
    int max_iter = kDiamondMaxIter);

/// Max over locally-optimized pure states phi on system (x) ancilla of
/// ||((ch1 - ch2) (x) I)(|phi><phi|)||_1. Always a lower bound on the
/// diamond distance; seeded and deterministic.
double diamond_lower_bound(
    const QuantumChannel &ch1, const QuantumChannel &ch2, int n_restarts = 32, uint64_t seed = 1);

/// Assembles the diamond-norm SDP for a given Choi difference matrix.
SdpProblem build_diamond_sdp(size_t dim, const ComplexMatrix &choi_diff);

}  // namespace honestq

#endif
