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

/// Dense complex linear algebra sized for 2-qubit problems (matrices up to
/// 32x32): Hermitian eigendecomposition, singular values, trace norm, PSD
/// testing, Kronecker products. All operations are pure functions on
/// immutable values.

#ifndef HONESTQ_MATRIX_HPP
#define HONESTQ_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "honestq/errors.hpp"

namespace honestq {

using cplx = std::complex<double>;

/// Asymmetry beyond this is rejected as non-Hermitian.
inline constexpr double kHermiticityTol = 1e-10;

/// Eigenvalues above -kPsdTol count as nonnegative.
inline constexpr double kPsdTol = 1e-9;

class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ComplexMatrix(size_t rows, size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(size_t dim);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    cplx &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    const std::vector<cplx> &entries() const {
        return entries_;
    }

    /// True iff every entry is finite.
    bool is_finite() const;

    /// Max asymmetry |m - m^dagger| over entries; requires square.
    double hermiticity_defect() const;

  private:
    size_t rows_, cols_;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, const ComplexMatrix &m);
ComplexMatrix dagger(const ComplexMatrix &m);
ComplexMatrix transpose(const ComplexMatrix &m);
cplx trace(const ComplexMatrix &m);

/// Largest |entry|.
double max_abs(const ComplexMatrix &m);

/// Frobenius norm.
double frobenius_norm(const ComplexMatrix &m);

/// Standard Kronecker product; dims multiply.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, unitary
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations. The input is
/// symmetrized internally; asymmetry beyond kHermiticityTol throws.
EigResult eig_hermitian(const ComplexMatrix &m);

/// Singular values in descending order (Jordan-Wielandt embedding, so small
/// singular values are not squared away).
std::vector<double> singular_values(const ComplexMatrix &m);

/// Sum of singular values; for Hermitian inputs the sum of |eigenvalues|.
double trace_norm(const ComplexMatrix &m);

/// True iff Hermitian with min eigenvalue >= -tol.
bool is_psd(const ComplexMatrix &m, double tol = kPsdTol);

/// Min eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &m);

class RealMatrix {
  public:
    RealMatrix() : rows_(0), cols_(0) {}
    RealMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RealMatrix identity(size_t dim);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    double &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const double &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    ComplexMatrix to_complex() const;

  private:
    size_t rows_, cols_;
    std::vector<double> entries_;
};

RealMatrix operator+(const RealMatrix &a, const RealMatrix &b);
RealMatrix operator-(const RealMatrix &a, const RealMatrix &b);
RealMatrix operator*(const RealMatrix &a, const RealMatrix &b);
RealMatrix operator*(double s, const RealMatrix &m);
RealMatrix transpose(const RealMatrix &m);

/// Eigenvalues (ascending) of a real symmetric matrix.
std::vector<double> eig_symmetric(const RealMatrix &m);

double min_eigenvalue(const RealMatrix &m);

}  // namespace honestq

#endif
