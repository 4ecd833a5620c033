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

#ifndef HONESTQ_PAULI_HPP
#define HONESTQ_PAULI_HPP

#include <array>
#include <string>
#include <vector>

#include "honestq/matrix.hpp"

namespace honestq {

/// Single-qubit Pauli, index 0..3 = I, X, Y, Z.
const ComplexMatrix &pauli(int index);

/// n-qubit Pauli basis in lexicographic order with the most significant
/// qubit first: index sum_q 4^(n-1-q) * i_q.
const std::vector<ComplexMatrix> &pauli_basis(int n_qubits);

/// Label like "iy" for a basis index (lowercase, most significant qubit first).
std::string pauli_label(int n_qubits, int index);

/// Inverse of pauli_label; accepts upper or lower case. Throws ParseError.
int pauli_index(int n_qubits, const std::string &label);

/// n . sigma for a real 3-vector n.
ComplexMatrix axis_dot_sigma(const std::array<double, 3> &axis);

}  // namespace honestq

#endif
