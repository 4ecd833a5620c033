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

#include "honestq/honesty.hpp"

#include <cmath>
#include <limits>

#include "honestq/pauli.hpp"

namespace honestq {

uint64_t split_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

uint64_t next_u64(uint64_t &state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double uniform01(uint64_t &state) {
    return (next_u64(state) >> 11) * 0x1.0p-53;
}

// Box-Muller; avoids implementation-defined std::normal_distribution so
// seeded runs are byte-identical across platforms.
double gaussian(uint64_t &state) {
    double u1 = uniform01(state);
    double u2 = uniform01(state);
    while (u1 <= 1e-300) {
        u1 = uniform01(state);
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Eigenstates of X, Y, Z in both signs, as fixed single-qubit state vectors.
const std::vector<std::vector<cplx>> &pauli_eigenstates_1q() {
    static const std::vector<std::vector<cplx>> states = [] {
        double s = 1.0 / std::sqrt(2.0);
        return std::vector<std::vector<cplx>>{
            {s, s},
            {s, -s},
            {s, cplx(0, 1) * s},
            {s, cplx(0, -1) * s},
            {1, 0},
            {0, 1},
        };
    }();
    return states;
}

std::vector<DensityMatrix> pauli_eigenstate_grid(int n_qubits) {
    const auto &one = pauli_eigenstates_1q();
    std::vector<std::vector<cplx>> vectors{{1}};
    for (int q = 0; q < n_qubits; q++) {
        std::vector<std::vector<cplx>> next;
        for (const auto &left : vectors) {
            for (const auto &right : one) {
                std::vector<cplx> prod;
                prod.reserve(left.size() * right.size());
                for (const auto &a : left) {
                    for (const auto &b : right) {
                        prod.push_back(a * b);
                    }
                }
                next.push_back(std::move(prod));
            }
        }
        vectors = std::move(next);
    }
    std::vector<DensityMatrix> out;
    out.reserve(vectors.size());
    for (const auto &v : vectors) {
        out.push_back(DensityMatrix::from_state_vector(n_qubits, v));
    }
    return out;
}

}  // namespace

DensityMatrix haar_random_pure_state(int n_qubits, uint64_t &rng_state) {
    size_t d = size_t{1} << n_qubits;
    std::vector<cplx> psi(d);
    for (auto &a : psi) {
        a = cplx(gaussian(rng_state), gaussian(rng_state));
    }
    return DensityMatrix::from_state_vector(n_qubits, psi);
}

double io_distinguishability(const QuantumChannel &ch, const DensityMatrix &rho) {
    if (rho.rho.rows() != ch.dim()) {
        throw DimensionMismatchError("io_distinguishability: dimension mismatch");
    }
    return trace_norm(apply_channel(ch, rho.rho) - rho.rho);
}

RealMatrix build_A(const RealMatrix &m_a) {
    if (m_a.rows() != m_a.cols()) {
        throw NonSquareError("build_A: matrix is not square");
    }
    RealMatrix diff = RealMatrix::identity(m_a.rows()) - m_a;
    return transpose(diff) * diff;
}

RealMatrix build_B_unital(const QuantumChannel &ch) {
    BlochAffineMap bloch = kraus_to_bloch(ch);
    if (bloch.translation_norm() > kUnitalTol) {
        throw NotUnitalError("build_B_unital: channel is not unital");
    }
    return build_A(bloch.m);
}

RealMatrix build_B_nonunital(const QuantumChannel &ch) {
    BlochAffineMap bloch = kraus_to_bloch(ch);
    size_t n = bloch.m.rows();
    RealMatrix diff = RealMatrix::identity(n) - bloch.m;
    RealMatrix b = transpose(diff) * diff;
    double t2 = 0;
    for (double x : bloch.t) {
        t2 += x * x;
    }
    // v = (I - M)^T t
    double v2 = 0;
    for (size_t r = 0; r < n; r++) {
        double vr = 0;
        for (size_t c = 0; c < n; c++) {
            vr += diff(c, r) * bloch.t[c];
        }
        v2 += vr * vr;
    }
    double correction = t2 + 2.0 * std::sqrt(v2);
    for (size_t i = 0; i < n; i++) {
        b(i, i) += correction;
    }
    return b;
}

HonestyCertificate certify(const RealMatrix &m_a, const QuantumChannel &ch, double tol) {
    size_t bloch_dim = (size_t{1} << (2 * ch.n_qubits)) - 1;
    if (m_a.rows() != bloch_dim || m_a.cols() != bloch_dim) {
        throw DimensionMismatchError("certify: Bloch dimension mismatch");
    }
    BlochAffineMap bloch = kraus_to_bloch(ch);
    bool unital = bloch.translation_norm() <= kUnitalTol;

    HonestyCertificate cert;
    cert.a = build_A(m_a);
    cert.b = unital ? build_B_unital(ch) : build_B_nonunital(ch);
    cert.min_eig_a_minus_b = min_eigenvalue(cert.a - cert.b);
    cert.tol = tol;
    cert.pass = cert.min_eig_a_minus_b >= -tol;
    if (ch.n_qubits > 1) {
        cert.mode = HonestyMode::multi_qubit_conjectural;
    } else {
        cert.mode = unital ? HonestyMode::unital : HonestyMode::non_unital;
    }
    return cert;
}

HonestyReport empirical_honesty_check(
    const QuantumChannel &approx, const QuantumChannel &ch, size_t n_samples, uint64_t seed) {
    if (approx.dim() != ch.dim()) {
        throw DimensionMismatchError("empirical_honesty_check: dimension mismatch");
    }
    HonestyReport report;
    report.n_samples = n_samples;
    report.seed = seed;
    report.max_violation = -std::numeric_limits<double>::infinity();

    auto consider = [&](const DensityMatrix &rho) {
        double v = io_distinguishability(ch, rho) - io_distinguishability(approx, rho);
        if (v > report.max_violation) {
            report.max_violation = v;
            report.worst_state = rho;
        }
    };

    for (const auto &rho : pauli_eigenstate_grid(ch.n_qubits)) {
        consider(rho);
    }
    uint64_t state = split_seed(seed, 0);
    for (size_t i = 0; i < n_samples; i++) {
        consider(haar_random_pure_state(ch.n_qubits, state));
    }
    return report;
}

}  // namespace honestq
