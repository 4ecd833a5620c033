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

// The eigensolver and singular values are cross-checked against Eigen, which
// is used here purely as an independent oracle; the library itself does not
// depend on it.

#include <algorithm>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "doctest.h"
#include "honestq/matrix.hpp"
#include "test_helpers.hpp"

using namespace honestq;
using honestq::testing::random_hermitian;
using honestq::testing::random_matrix;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(static_cast<long>(r), static_cast<long>(c)) = m(r, c);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    uint64_t st = 11;
    ComplexMatrix a = random_matrix(3, 3, st);
    ComplexMatrix b = random_matrix(3, 3, st);
    ComplexMatrix id = ComplexMatrix::identity(3);

    CHECK(max_abs(a * id - a) == doctest::Approx(0).epsilon(1e-14));
    CHECK(max_abs((a + b) - (b + a)) == doctest::Approx(0).epsilon(1e-14));
    CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-12);
    CHECK(max_abs(dagger(dagger(a)) - a) == 0);
    CHECK(max_abs(transpose(transpose(a)) - a) == 0);
}

TEST_CASE("hermiticity defect") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = cplx(0, 1);
    m(1, 0) = cplx(0, -1);
    m(1, 1) = 2.0;
    CHECK(m.hermiticity_defect() < 1e-15);
    m(1, 0) = cplx(0, -1.5);
    CHECK(m.hermiticity_defect() == doctest::Approx(0.5));
}

TEST_CASE("kron mixed-product property") {
    uint64_t st = 5;
    for (int trial = 0; trial < 10; trial++) {
        ComplexMatrix a = random_matrix(2, 2, st), b = random_matrix(3, 3, st);
        ComplexMatrix c = random_matrix(2, 2, st), d = random_matrix(3, 3, st);
        ComplexMatrix lhs = kron(a, b) * kron(c, d);
        ComplexMatrix rhs = kron(a * c, b * d);
        CHECK(max_abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("eig_hermitian matches Eigen on random matrices") {
    uint64_t st = 17;
    for (size_t dim : {2, 3, 4, 8, 16}) {
        for (int trial = 0; trial < 8; trial++) {
            ComplexMatrix m = random_hermitian(dim, st);
            EigResult res = eig_hermitian(m);

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(m));
            REQUIRE(res.eigenvalues.size() == dim);
            for (size_t i = 0; i < dim; i++) {
                CHECK(res.eigenvalues[i] ==
                      doctest::Approx(ref.eigenvalues()(static_cast<long>(i))).epsilon(1e-10));
            }

            // Reconstruction V diag(w) V^dag == m.
            ComplexMatrix recon(dim, dim);
            for (size_t r = 0; r < dim; r++) {
                for (size_t c = 0; c < dim; c++) {
                    cplx sum(0, 0);
                    for (size_t k = 0; k < dim; k++) {
                        sum += res.eigenvectors(r, k) * res.eigenvalues[k] *
                               std::conj(res.eigenvectors(c, k));
                    }
                    recon(r, c) = sum;
                }
            }
            CHECK(max_abs(recon - m) < 1e-10);

            // Eigenvector unitarity.
            CHECK(max_abs(dagger(res.eigenvectors) * res.eigenvectors -
                          ComplexMatrix::identity(dim)) < 1e-11);
        }
    }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    uint64_t st = 23;
    ComplexMatrix m = random_matrix(3, 3, st);
    m(0, 1) += cplx(1.0, 1.0);
    CHECK_THROWS_AS(eig_hermitian(m), NotHermitianError);
}

TEST_CASE("singular values match Eigen") {
    uint64_t st = 31;
    for (auto [r, c] : {std::pair<size_t, size_t>{4, 4}, {3, 5}, {6, 2}}) {
        for (int trial = 0; trial < 6; trial++) {
            ComplexMatrix m = random_matrix(r, c, st);
            std::vector<double> sv = singular_values(m);
            Eigen::JacobiSVD<Eigen::MatrixXcd> ref(to_eigen(m));
            REQUIRE(sv.size() == std::min(r, c));
            for (size_t i = 0; i < sv.size(); i++) {
                CHECK(sv[i] ==
                      doctest::Approx(ref.singularValues()(static_cast<long>(i))).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("trace norm properties") {
    uint64_t st = 41;
    for (int trial = 0; trial < 10; trial++) {
        ComplexMatrix a = random_matrix(4, 4, st), b = random_matrix(4, 4, st);
        double ta = trace_norm(a), tb = trace_norm(b), tab = trace_norm(a + b);
        CHECK(tab <= ta + tb + 1e-10);
        CHECK(std::abs(trace(a)) <= ta + 1e-10);
        CHECK(trace_norm(cplx(-1, 0) * a) == doctest::Approx(ta).epsilon(1e-12));
    }
}

TEST_CASE("psd checks") {
    uint64_t st = 43;
    ComplexMatrix g = random_matrix(4, 4, st);
    ComplexMatrix psd = g * dagger(g);
    CHECK(is_psd(psd));
    CHECK(min_eigenvalue(psd) >= -1e-12);
    ComplexMatrix not_psd = psd - cplx(10, 0) * ComplexMatrix::identity(4);
    CHECK_FALSE(is_psd(not_psd));
}

TEST_CASE("real symmetric eigenvalues") {
    RealMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    std::vector<double> w = eig_symmetric(m);
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == doctest::Approx(3.0));
    CHECK(min_eigenvalue(m) == doctest::Approx(1.0));
}
