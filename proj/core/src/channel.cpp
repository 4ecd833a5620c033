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

#include "honestq/channel.hpp"

#include <cmath>

#include "honestq/pauli.hpp"

namespace honestq {

namespace {

// |w_m> = (I (x) sigma_m) |Omega> with |Omega> = sum_i |ii>, as a column:
// w_m[i*d + a] = sigma_m[a][i].
std::vector<cplx> pauli_pair_vector(const ComplexMatrix &sigma) {
    size_t d = sigma.rows();
    std::vector<cplx> w(d * d);
    for (size_t i = 0; i < d; i++) {
        for (size_t a = 0; a < d; a++) {
            w[i * d + a] = sigma(a, i);
        }
    }
    return w;
}

}  // namespace

QuantumChannel QuantumChannel::from_kraus(int n_qubits, std::vector<ComplexMatrix> kraus) {
    if (n_qubits < 1) {
        throw InvalidChannelError("channel needs at least one qubit");
    }
    if (kraus.empty()) {
        throw InvalidChannelError("channel needs at least one Kraus operator");
    }
    size_t d = size_t{1} << n_qubits;
    ComplexMatrix acc(d, d);
    for (const auto &k : kraus) {
        if (k.rows() != d || k.cols() != d) {
            throw InvalidChannelError("Kraus operator has wrong dimension");
        }
        if (!k.is_finite()) {
            throw InvalidChannelError("Kraus operator has non-finite entries");
        }
        acc = acc + dagger(k) * k;
    }
    double defect = max_abs(acc - ComplexMatrix::identity(d));
    if (defect > kTracePreservationTol) {
        throw InvalidChannelError("trace preservation defect " + std::to_string(defect));
    }
    QuantumChannel ch;
    ch.n_qubits = n_qubits;
    ch.kraus = std::move(kraus);
    return ch;
}

double BlochAffineMap::translation_norm() const {
    double s = 0;
    for (double x : t) {
        s += x * x;
    }
    return std::sqrt(s);
}

DensityMatrix DensityMatrix::from_state_vector(int n_qubits, const std::vector<cplx> &psi) {
    size_t d = size_t{1} << n_qubits;
    if (psi.size() != d) {
        throw DimensionMismatchError("state vector has wrong dimension");
    }
    double norm2 = 0;
    for (const auto &a : psi) {
        norm2 += std::norm(a);
    }
    if (norm2 <= 0) {
        throw Error("zero state vector");
    }
    DensityMatrix out;
    out.n_qubits = n_qubits;
    out.rho = ComplexMatrix(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            out.rho(r, c) = psi[r] * std::conj(psi[c]) / norm2;
        }
    }
    return out;
}

DensityMatrix DensityMatrix::from_bloch(const std::array<double, 3> &r) {
    DensityMatrix out;
    out.n_qubits = 1;
    out.rho = 0.5 * (ComplexMatrix::identity(2) + axis_dot_sigma(r));
    return out;
}

std::array<double, 3> DensityMatrix::bloch_vector() const {
    if (n_qubits != 1) {
        throw DimensionMismatchError("bloch_vector: single qubit only");
    }
    std::array<double, 3> r{};
    for (int i = 0; i < 3; i++) {
        r[static_cast<size_t>(i)] = trace(rho * pauli(i + 1)).real();
    }
    return r;
}

ComplexMatrix apply_channel(const QuantumChannel &ch, const ComplexMatrix &rho) {
    size_t d = ch.dim();
    if (rho.rows() != d || rho.cols() != d) {
        throw DimensionMismatchError("apply_channel: state dimension mismatch");
    }
    ComplexMatrix out(d, d);
    for (const auto &k : ch.kraus) {
        out = out + k * rho * dagger(k);
    }
    return out;
}

ComplexMatrix kraus_to_choi(const QuantumChannel &ch) {
    size_t d = ch.dim();
    ComplexMatrix choi(d * d, d * d);
    for (const auto &k : ch.kraus) {
        // (I (x) K)|Omega>, input factor first.
        std::vector<cplx> w(d * d);
        for (size_t i = 0; i < d; i++) {
            for (size_t a = 0; a < d; a++) {
                w[i * d + a] = k(a, i);
            }
        }
        for (size_t r = 0; r < d * d; r++) {
            for (size_t c = 0; c < d * d; c++) {
                choi(r, c) += w[r] * std::conj(w[c]);
            }
        }
    }
    return choi;
}

ChiMatrix kraus_to_chi(const QuantumChannel &ch) {
    size_t d = ch.dim();
    const auto &basis = pauli_basis(ch.n_qubits);
    size_t nb = basis.size();
    ChiMatrix out;
    out.n_qubits = ch.n_qubits;
    out.chi = ComplexMatrix(nb, nb);
    for (const auto &k : ch.kraus) {
        std::vector<cplx> coeff(nb);
        for (size_t m = 0; m < nb; m++) {
            coeff[m] = trace(basis[m] * k) / static_cast<double>(d);
        }
        for (size_t m = 0; m < nb; m++) {
            for (size_t n = 0; n < nb; n++) {
                out.chi(m, n) += coeff[m] * std::conj(coeff[n]);
            }
        }
    }
    return out;
}

ChiMatrix choi_to_chi(int n_qubits, const ComplexMatrix &choi) {
    const auto &basis = pauli_basis(n_qubits);
    size_t nb = basis.size();
    size_t d = size_t{1} << n_qubits;
    if (choi.rows() != d * d || choi.cols() != d * d) {
        throw DimensionMismatchError("choi_to_chi: dimension mismatch");
    }
    std::vector<std::vector<cplx>> w(nb);
    for (size_t m = 0; m < nb; m++) {
        w[m] = pauli_pair_vector(basis[m]);
    }
    ChiMatrix out;
    out.n_qubits = n_qubits;
    out.chi = ComplexMatrix(nb, nb);
    for (size_t m = 0; m < nb; m++) {
        for (size_t n = 0; n < nb; n++) {
            cplx acc = 0;
            for (size_t r = 0; r < d * d; r++) {
                for (size_t c = 0; c < d * d; c++) {
                    acc += std::conj(w[m][r]) * choi(r, c) * w[n][c];
                }
            }
            out.chi(m, n) = acc / static_cast<double>(d * d);
        }
    }
    return out;
}

ComplexMatrix chi_to_choi(const ChiMatrix &chi) {
    const auto &basis = pauli_basis(chi.n_qubits);
    size_t nb = basis.size();
    size_t d = size_t{1} << chi.n_qubits;
    ComplexMatrix choi(d * d, d * d);
    for (size_t m = 0; m < nb; m++) {
        auto wm = pauli_pair_vector(basis[m]);
        for (size_t n = 0; n < nb; n++) {
            cplx v = chi.chi(m, n);
            if (std::abs(v) < 1e-300) {
                continue;
            }
            auto wn = pauli_pair_vector(basis[n]);
            for (size_t r = 0; r < d * d; r++) {
                for (size_t c = 0; c < d * d; c++) {
                    choi(r, c) += v * wm[r] * std::conj(wn[c]);
                }
            }
        }
    }
    return choi;
}

namespace {

void check_chi(const ChiMatrix &chi) {
    const auto &basis = pauli_basis(chi.n_qubits);
    size_t nb = basis.size();
    size_t d = size_t{1} << chi.n_qubits;
    if (chi.chi.rows() != nb || chi.chi.cols() != nb) {
        throw InvalidChiError("chi matrix has wrong dimension");
    }
    if (chi.chi.hermiticity_defect() > 1e-9) {
        throw InvalidChiError("chi matrix is not Hermitian");
    }
    // Trace preservation: sum_mn chi_mn sigma_n^dag sigma_m == I.
    ComplexMatrix acc(d, d);
    for (size_t m = 0; m < nb; m++) {
        for (size_t n = 0; n < nb; n++) {
            cplx v = chi.chi(m, n);
            if (std::abs(v) < 1e-300) {
                continue;
            }
            acc = acc + v * (dagger(basis[n]) * basis[m]);
        }
    }
    if (max_abs(acc - ComplexMatrix::identity(d)) > 1e-9) {
        throw InvalidChiError("chi matrix violates trace preservation");
    }
}

}  // namespace

QuantumChannel chi_to_kraus(const ChiMatrix &chi) {
    check_chi(chi);
    const auto &basis = pauli_basis(chi.n_qubits);
    size_t nb = basis.size();
    size_t d = size_t{1} << chi.n_qubits;
    auto eig = eig_hermitian(chi.chi);
    if (eig.eigenvalues.front() < -kPsdTol) {
        throw InvalidChiError("chi matrix is not PSD");
    }
    std::vector<ComplexMatrix> kraus;
    for (size_t l = 0; l < nb; l++) {
        double lambda = eig.eigenvalues[l];
        if (lambda <= 1e-14) {
            continue;
        }
        ComplexMatrix k(d, d);
        for (size_t m = 0; m < nb; m++) {
            cplx v = eig.eigenvectors(m, l);
            if (std::abs(v) < 1e-300) {
                continue;
            }
            k = k + v * basis[m];
        }
        k = std::sqrt(lambda) * k;
        // Gauge: first nonzero entry real positive.
        for (size_t idx = 0; idx < d * d; idx++) {
            cplx e = k(idx / d, idx % d);
            if (std::abs(e) > 1e-12) {
                k = (std::conj(e) / std::abs(e)) * k;
                break;
            }
        }
        kraus.push_back(std::move(k));
    }
    return QuantumChannel::from_kraus(chi.n_qubits, std::move(kraus));
}

PauliTransferMatrix chi_to_ptm(const ChiMatrix &chi) {
    check_chi(chi);
    const auto &basis = pauli_basis(chi.n_qubits);
    size_t nb = basis.size();
    size_t d = size_t{1} << chi.n_qubits;
    PauliTransferMatrix out;
    out.n_qubits = chi.n_qubits;
    out.r = RealMatrix(nb, nb);
    for (size_t j = 0; j < nb; j++) {
        ComplexMatrix image(d, d);
        for (size_t m = 0; m < nb; m++) {
            for (size_t n = 0; n < nb; n++) {
                cplx v = chi.chi(m, n);
                if (std::abs(v) < 1e-300) {
                    continue;
                }
                image = image + v * (basis[m] * basis[j] * dagger(basis[n]));
            }
        }
        for (size_t i = 0; i < nb; i++) {
            cplx e = trace(basis[i] * image) / static_cast<double>(d);
            if (std::abs(e.imag()) > 1e-9) {
                throw InvalidChiError("PTM entry has imaginary part beyond tolerance");
            }
            out.r(i, j) = e.real();
        }
    }
    return out;
}

ChiMatrix ptm_to_chi(const PauliTransferMatrix &ptm) {
    const auto &basis = pauli_basis(ptm.n_qubits);
    size_t nb = basis.size();
    size_t d = size_t{1} << ptm.n_qubits;
    // J = (1/d) sum_ij R_ij sigma_j^T (x) sigma_i.
    ComplexMatrix choi(d * d, d * d);
    for (size_t i = 0; i < nb; i++) {
        for (size_t j = 0; j < nb; j++) {
            double v = ptm.r(i, j);
            if (v == 0) {
                continue;
            }
            choi = choi + (v / static_cast<double>(d)) * kron(transpose(basis[j]), basis[i]);
        }
    }
    return choi_to_chi(ptm.n_qubits, choi);
}

PauliTransferMatrix kraus_to_ptm(const QuantumChannel &ch) {
    const auto &basis = pauli_basis(ch.n_qubits);
    size_t nb = basis.size();
    size_t d = ch.dim();
    PauliTransferMatrix out;
    out.n_qubits = ch.n_qubits;
    out.r = RealMatrix(nb, nb);
    for (size_t j = 0; j < nb; j++) {
        ComplexMatrix image = apply_channel(ch, basis[j]);
        for (size_t i = 0; i < nb; i++) {
            out.r(i, j) = trace(basis[i] * image).real() / static_cast<double>(d);
        }
    }
    return out;
}

BlochAffineMap ptm_to_bloch(const PauliTransferMatrix &ptm) {
    size_t nb = ptm.r.rows();
    if (std::abs(ptm.r(0, 0) - 1.0) > 1e-9) {
        throw NotTracePreservingError("PTM (0,0) entry differs from 1");
    }
    for (size_t c = 1; c < nb; c++) {
        if (std::abs(ptm.r(0, c)) > 1e-9) {
            throw NotTracePreservingError("PTM first row is not (1, 0, ..., 0)");
        }
    }
    BlochAffineMap out;
    out.m = RealMatrix(nb - 1, nb - 1);
    out.t.assign(nb - 1, 0.0);
    for (size_t r = 1; r < nb; r++) {
        out.t[r - 1] = ptm.r(r, 0);
        for (size_t c = 1; c < nb; c++) {
            out.m(r - 1, c - 1) = ptm.r(r, c);
        }
    }
    return out;
}

BlochAffineMap kraus_to_bloch(const QuantumChannel &ch) {
    return ptm_to_bloch(kraus_to_ptm(ch));
}

double average_fidelity(const ChiMatrix &chi) {
    size_t nb = size_t{1} << (2 * chi.n_qubits);
    if (chi.chi.rows() != nb || chi.chi.cols() != nb) {
        throw InvalidChiError("chi matrix has wrong dimension");
    }
    double d = static_cast<double>(size_t{1} << chi.n_qubits);
    double chi00 = chi.chi(0, 0).real();
    return (d * chi00 + 1.0) / (d + 1.0);
}

CptpReport validate_cptp(const QuantumChannel &ch) {
    size_t d = ch.dim();
    ComplexMatrix acc(d, d);
    for (const auto &k : ch.kraus) {
        acc = acc + dagger(k) * k;
    }
    CptpReport report;
    report.tp_defect = max_abs(acc - ComplexMatrix::identity(d));
    report.choi_min_eig = min_eigenvalue(kraus_to_choi(ch));
    report.pass = report.tp_defect <= kTracePreservationTol && report.choi_min_eig >= -kPsdTol;
    return report;
}

}  // namespace honestq
