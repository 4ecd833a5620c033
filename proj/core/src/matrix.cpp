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

#include "honestq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace honestq {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error("entry count does not match rows*cols");
    }
    if (!is_finite()) {
        throw Error("non-finite matrix entry");
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const auto &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            return false;
        }
    }
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) {
        throw NonSquareError("hermiticity_defect: matrix is not square");
    }
    double worst = 0;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r; c < cols_; c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix add: shape mismatch");
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c) + b(r, c);
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix sub: shape mismatch");
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c) - b(r, c);
        }
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("matrix mul: shape mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            cplx ark = a(r, k);
            if (ark == cplx(0, 0)) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = s * m(r, c);
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(c, r) = m(r, c);
        }
    }
    return out;
}

cplx trace(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw NonSquareError("trace: matrix is not square");
    }
    cplx t = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        t += m(i, i);
    }
    return t;
}

double max_abs(const ComplexMatrix &m) {
    double worst = 0;
    for (const auto &e : m.entries()) {
        worst = std::max(worst, std::abs(e));
    }
    return worst;
}

double frobenius_norm(const ComplexMatrix &m) {
    double s = 0;
    for (const auto &e : m.entries()) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            cplx v = a(ar, ac);
            if (v == cplx(0, 0)) {
                continue;
            }
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
                }
            }
        }
    }
    return out;
}

namespace {

// One cyclic Jacobi sweep over the strict upper triangle of a Hermitian
// matrix held in `a`, accumulating rotations into `v`.
void jacobi_sweep(ComplexMatrix &a, ComplexMatrix &v) {
    size_t n = a.rows();
    for (size_t p = 0; p + 1 < n; p++) {
        for (size_t q = p + 1; q < n; q++) {
            cplx apq = a(p, q);
            double mag = std::abs(apq);
            if (mag < 1e-300) {
                a(p, q) = 0;
                a(q, p) = 0;
                continue;
            }
            double app = a(p, p).real();
            double aqq = a(q, q).real();
            double phi = std::arg(apq);
            double tau = (app - aqq) / (2.0 * mag);
            double sign = tau >= 0 ? 1.0 : -1.0;
            double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            double c = 1.0 / std::sqrt(1.0 + t * t);
            double s = t * c;
            cplx eip(std::cos(phi), std::sin(phi));

            // Column update: A <- A U with U = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
            // on columns (p, q); then the conjugate row update gives U^dag A U.
            for (size_t k = 0; k < n; k++) {
                cplx akp = a(k, p);
                cplx akq = a(k, q);
                a(k, p) = c * akp + s * std::conj(eip) * akq;
                a(k, q) = -s * eip * akp + c * akq;
            }
            for (size_t k = 0; k < n; k++) {
                cplx apk = a(p, k);
                cplx aqk = a(q, k);
                a(p, k) = c * apk + s * eip * aqk;
                a(q, k) = -s * std::conj(eip) * apk + c * aqk;
            }
            for (size_t k = 0; k < n; k++) {
                cplx vkp = v(k, p);
                cplx vkq = v(k, q);
                v(k, p) = c * vkp + s * std::conj(eip) * vkq;
                v(k, q) = -s * eip * vkp + c * vkq;
            }
            a(p, q) = 0;
            a(q, p) = 0;
            a(p, p) = cplx(a(p, p).real(), 0);
            a(q, q) = cplx(a(q, q).real(), 0);
        }
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw NonSquareError("eig_hermitian: matrix is not square");
    }
    double scale = std::max(1.0, max_abs(m));
    if (m.hermiticity_defect() > kHermiticityTol * scale) {
        throw NotHermitianError("eig_hermitian: asymmetry beyond tolerance");
    }
    size_t n = m.rows();
    ComplexMatrix a(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    double fro = std::max(frobenius_norm(a), 1e-300);
    for (int sweep = 0; sweep < 100; sweep++) {
        if (off_diagonal_norm(a) <= 1e-15 * fro) {
            break;
        }
        jacobi_sweep(a, v);
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigResult out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (size_t c = 0; c < n; c++) {
        out.eigenvalues[c] = a(order[c], order[c]).real();
        for (size_t r = 0; r < n; r++) {
            out.eigenvectors(r, c) = v(r, order[c]);
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    // Hermitian inputs need no embedding.
    if (m.is_square() && m.hermiticity_defect() <= kHermiticityTol * std::max(1.0, max_abs(m))) {
        auto eig = eig_hermitian(m);
        std::vector<double> sv(eig.eigenvalues.size());
        for (size_t i = 0; i < sv.size(); i++) {
            sv[i] = std::abs(eig.eigenvalues[i]);
        }
        std::sort(sv.begin(), sv.end(), std::greater<>());
        return sv;
    }
    size_t r = m.rows();
    size_t c = m.cols();
    ComplexMatrix emb(r + c, r + c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            emb(i, r + j) = m(i, j);
            emb(r + j, i) = std::conj(m(i, j));
        }
    }
    auto eig = eig_hermitian(emb);
    // Spectrum is symmetric {+sigma, -sigma}; the top min(r,c) values are the
    // singular values.
    size_t k = std::min(r, c);
    std::vector<double> sv(k);
    for (size_t i = 0; i < k; i++) {
        sv[i] = std::max(0.0, eig.eigenvalues[r + c - 1 - i]);
    }
    return sv;
}

double trace_norm(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw NonSquareError("trace_norm: matrix is not square");
    }
    auto sv = singular_values(m);
    double s = 0;
    for (double x : sv) {
        s += x;
    }
    return s;
}

bool is_psd(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        throw NonSquareError("is_psd: matrix is not square");
    }
    if (m.hermiticity_defect() > kHermiticityTol * std::max(1.0, max_abs(m))) {
        throw NotHermitianError("is_psd: asymmetry beyond tolerance");
    }
    return min_eigenvalue(m) >= -tol;
}

double min_eigenvalue(const ComplexMatrix &m) {
    auto eig = eig_hermitian(m);
    return eig.eigenvalues.front();
}

RealMatrix RealMatrix::identity(size_t dim) {
    RealMatrix m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix RealMatrix::to_complex() const {
    ComplexMatrix out(rows_, cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(r, c) = (*this)(r, c);
        }
    }
    return out;
}

RealMatrix operator+(const RealMatrix &a, const RealMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix add: shape mismatch");
    }
    RealMatrix out(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c) + b(r, c);
        }
    }
    return out;
}

RealMatrix operator-(const RealMatrix &a, const RealMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix sub: shape mismatch");
    }
    RealMatrix out(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c) - b(r, c);
        }
    }
    return out;
}

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("matrix mul: shape mismatch");
    }
    RealMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            double ark = a(r, k);
            if (ark == 0) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

RealMatrix operator*(double s, const RealMatrix &m) {
    RealMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = s * m(r, c);
        }
    }
    return out;
}

RealMatrix transpose(const RealMatrix &m) {
    RealMatrix out(m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(c, r) = m(r, c);
        }
    }
    return out;
}

std::vector<double> eig_symmetric(const RealMatrix &m) {
    return eig_hermitian(m.to_complex()).eigenvalues;
}

double min_eigenvalue(const RealMatrix &m) {
    return eig_symmetric(m).front();
}

}  // namespace honestq
