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

/// Small dense semidefinite programming over block-diagonal Hermitian
/// variables, solved by a primal-dual interior-point method with
/// Nesterov-Todd scaling. Sized for the diamond-norm programs that arise
/// here (total block dimension at most 2 * 4^n + 2^n).

#ifndef HONESTQ_SDP_HPP
#define HONESTQ_SDP_HPP

#include <vector>

#include "honestq/matrix.hpp"

namespace honestq {

/// One Hermitian-matrix entry of a constraint matrix. Off-diagonal entries
/// must appear together with their conjugate mirror so the matrix is
/// Hermitian as listed.
struct SdpTerm {
    size_t block;
    size_t row;
    size_t col;
    cplx value;
};

/// <A_k, X> = rhs_k with A_k given by its nonzero entries.
struct SdpConstraint {
    std::vector<SdpTerm> terms;
    double rhs = 0;
};

/// maximize <C, X>  subject to  <A_k, X> = b_k,  X >= 0,
/// with X block-diagonal Hermitian.
struct SdpProblem {
    std::vector<size_t> block_dims;
    std::vector<ComplexMatrix> objective;  // Hermitian blocks matching block_dims
    std::vector<SdpConstraint> constraints;
};

enum class SdpStatus {
    optimal,
    max_iter,
    infeasible,
};

struct SdpSolution {
    double primal = 0;  // <C, X>
    double dual = 0;    // b . y
    double gap = 0;     // |primal - dual|
    int iterations = 0;
    SdpStatus status = SdpStatus::max_iter;
};

struct SdpResult {
    std::vector<ComplexMatrix> x;
    std::vector<double> y;
    SdpSolution info;
};

/// Convergence requires complementarity <X, Z> and the feasibility residuals
/// below gap_tol. Failure is loud via status, never a clamped value.
SdpResult solve_sdp(const SdpProblem &problem, double gap_tol = 1e-8, int max_iter = 200);

}  // namespace honestq

#endif
