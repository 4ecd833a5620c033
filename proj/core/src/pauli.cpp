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

#include "honestq/pauli.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace honestq {

const ComplexMatrix &pauli(int index) {
    static const std::array<ComplexMatrix, 4> paulis = [] {
        std::array<ComplexMatrix, 4> p{
            ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
        p[0](0, 0) = 1;
        p[0](1, 1) = 1;
        p[1](0, 1) = 1;
        p[1](1, 0) = 1;
        p[2](0, 1) = cplx(0, -1);
        p[2](1, 0) = cplx(0, 1);
        p[3](0, 0) = 1;
        p[3](1, 1) = -1;
        return p;
    }();
    if (index < 0 || index > 3) {
        throw Error("pauli index out of range");
    }
    return paulis[static_cast<size_t>(index)];
}

const std::vector<ComplexMatrix> &pauli_basis(int n_qubits) {
    static std::map<int, std::vector<ComplexMatrix>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n_qubits);
    if (it != cache.end()) {
        return it->second;
    }
    if (n_qubits < 1) {
        throw Error("pauli_basis: need at least one qubit");
    }
    std::vector<ComplexMatrix> basis{ComplexMatrix::identity(1)};
    for (int q = 0; q < n_qubits; q++) {
        std::vector<ComplexMatrix> next;
        next.reserve(basis.size() * 4);
        for (const auto &left : basis) {
            for (int i = 0; i < 4; i++) {
                next.push_back(kron(left, pauli(i)));
            }
        }
        basis = std::move(next);
    }
    return cache.emplace(n_qubits, std::move(basis)).first->second;
}

std::string pauli_label(int n_qubits, int index) {
    static const char letters[] = {'i', 'x', 'y', 'z'};
    std::string label(static_cast<size_t>(n_qubits), 'i');
    for (int q = n_qubits - 1; q >= 0; q--) {
        label[static_cast<size_t>(q)] = letters[index & 3];
        index >>= 2;
    }
    return label;
}

int pauli_index(int n_qubits, const std::string &label) {
    if (static_cast<int>(label.size()) != n_qubits) {
        throw ParseError("pauli label '" + label + "' has wrong length");
    }
    int index = 0;
    for (char ch : label) {
        int digit;
        switch (std::tolower(static_cast<unsigned char>(ch))) {
            case 'i':
            case '0':
                digit = 0;
                break;
            case 'x':
            case '1':
                digit = 1;
                break;
            case 'y':
            case '2':
                digit = 2;
                break;
            case 'z':
            case '3':
                digit = 3;
                break;
            default:
                throw ParseError(std::string("bad pauli letter '") + ch + "'");
        }
        index = index * 4 + digit;
    }
    return index;
}

ComplexMatrix axis_dot_sigma(const std::array<double, 3> &axis) {
    ComplexMatrix out(2, 2);
    for (int i = 0; i < 3; i++) {
        out = out + axis[static_cast<size_t>(i)] * pauli(i + 1);
    }
    return out;
}

}  // namespace honestq
