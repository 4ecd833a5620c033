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

#include "honestq/diamond.hpp"

#include <cmath>

#include "honestq/honesty.hpp"

namespace honestq {

SdpProblem build_diamond_sdp(size_t dim, const ComplexMatrix &choi_diff) {
    const size_t d = dim;
    const size_t big = d * d;
    SdpProblem p;
    // Blocks: W (d^2), slack S = rho (x) I - W (d^2), rho (d).
    p.block_dims = {big, big, d};
    p.objective = {2.0 * choi_diff, ComplexMatrix(big, big), ComplexMatrix(d, d)};

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    // W + S - rho (x) I = 0, expanded over a real basis of Hermitian matrices
    // on the doubled space. Composite index is input*d + output; the rho part
    // only appears when the output indices agree.
    auto add_pair_constraint = [&](size_t r, size_t c, cplx v_rc) {
        SdpConstraint con;
        con.rhs = 0;
        if (r == c) {
            con.terms.push_back({0, r, c, v_rc});
            con.terms.push_back({1, r, c, v_rc});
        } else {
            con.terms.push_back({0, r, c, v_rc});
            con.terms.push_back({0, c, r, std::conj(v_rc)});
            con.terms.push_back({1, r, c, v_rc});
            con.terms.push_back({1, c, r, std::conj(v_rc)});
        }
        size_t ir = r / d, ar = r % d;
        size_t ic = c / d, ac = c % d;
        if (ar == ac) {
            if (ir == ic) {
                con.terms.push_back({2, ir, ic, -v_rc});
            } else {
                con.terms.push_back({2, ir, ic, -v_rc});
                con.terms.push_back({2, ic, ir, -std::conj(v_rc)});
            }
        }
        p.constraints.push_back(std::move(con));
    };

    for (size_t r = 0; r < big; r++) {
        add_pair_constraint(r, r, 1.0);
    }
    for (size_t r = 0; r < big; r++) {
        for (size_t c = r + 1; c < big; c++) {
            add_pair_constraint(r, c, inv_sqrt2);
            add_pair_constraint(r, c, cplx(0, inv_sqrt2));
        }
    }

    SdpConstraint tr_con;
    tr_con.rhs = 1;
    for (size_t i = 0; i < d; i++) {
        tr_con.terms.push_back({2, i, i, 1.0});
    }
    p.constraints.push_back(std::move(tr_con));
    return p;
}

DiamondResult diamond_distance(
    const QuantumChannel &ch1, const QuantumChannel &ch2, double gap_tol, int max_iter) {
    if (ch1.dim() != ch2.dim()) {
        throw DimensionMismatchError("diamond_distance: dimension mismatch");
    }
    ComplexMatrix choi_diff = kraus_to_choi(ch1) - kraus_to_choi(ch2);

    DiamondResult out;
    if (max_abs(choi_diff) < 1e-14) {
        out.value = 0;
        out.sdp.status = SdpStatus::optimal;
        return out;
    }

    SdpProblem problem = build_diamond_sdp(ch1.dim(), choi_diff);
    SdpResult res = solve_sdp(problem, gap_tol, max_iter);
    if (res.info.status != SdpStatus::optimal) {
        throw SolverFailure(
            "diamond-norm SDP did not converge: gap " + std::to_string(res.info.gap) + " after " +
            std::to_string(res.info.iterations) + " iterations");
    }
    out.sdp = res.info;
    out.value = 0.5 * (res.info.primal + res.info.dual);
    return out;
}

namespace {

// Hermitian "sign": same eigenvectors, eigenvalues mapped to +-1.
ComplexMatrix sign_of(const EigResult &eig) {
    size_t n = eig.eigenvalues.size();
    ComplexMatrix out(n, n);
    for (size_t l = 0; l < n; l++) {
        double s = eig.eigenvalues[l] >= 0 ? 1.0 : -1.0;
        for (size_t r = 0; r < n; r++) {
            cplx vl = s * eig.eigenvectors(r, l);
            for (size_t c = 0; c < n; c++) {
                out(r, c) += vl * std::conj(eig.eigenvectors(c, l));
            }
        }
    }
    return out;
}

void normalize(std::vector<cplx> &phi) {
    double n2 = 0;
    for (const auto &a : phi) {
        n2 += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(std::max(n2, 1e-300));
    for (auto &a : phi) {
        a *= inv;
    }
}

}  // namespace

double diamond_lower_bound(
    const QuantumChannel &ch1, const QuantumChannel &ch2, int n_restarts, uint64_t seed) {
    if (ch1.dim() != ch2.dim()) {
        throw DimensionMismatchError("diamond_lower_bound: dimension mismatch");
    }
    size_t d = ch1.dim();
    size_t big = d * d;

    // Extended Kraus operators K (x) I with a matching sign for the difference.
    std::vector<std::pair<double, ComplexMatrix>> ext;
    for (const auto &k : ch1.kraus) {
        ext.emplace_back(1.0, kron(k, ComplexMatrix::identity(d)));
    }
    for (const auto &k : ch2.kraus) {
        ext.emplace_back(-1.0, kron(k, ComplexMatrix::identity(d)));
    }

    auto difference_output = [&](const std::vector<cplx> &phi) {
        ComplexMatrix y(big, big);
        for (const auto &[sign, kx] : ext) {
            std::vector<cplx> u(big, cplx(0, 0));
            for (size_t r = 0; r < big; r++) {
                for (size_t c = 0; c < big; c++) {
                    u[r] += kx(r, c) * phi[c];
                }
            }
            for (size_t r = 0; r < big; r++) {
                for (size_t c = 0; c < big; c++) {
                    y(r, c) += sign * u[r] * std::conj(u[c]);
                }
            }
        }
        return y;
    };

    double best = 0;
    for (int restart = 0; restart < n_restarts; restart++) {
        std::vector<cplx> phi(big, cplx(0, 0));
        if (restart == 0) {
            // Maximally entangled start; optimal for Pauli-diagonal differences.
            for (size_t i = 0; i < d; i++) {
                phi[i * d + i] = 1.0;
            }
        } else {
            uint64_t st = split_seed(seed, static_cast<uint64_t>(restart));
            DensityMatrix psi = haar_random_pure_state(2 * ch1.n_qubits, st);
            EigResult eig = eig_hermitian(psi.rho);
            for (size_t i = 0; i < big; i++) {
                phi[i] = eig.eigenvectors(i, big - 1);
            }
        }
        normalize(phi);

        // Alternate the dual witness P = sign(Y) with the optimal input state,
        // the top eigenvector of sum_k s_k Kx^dag P Kx. Both steps are
        // monotone, so the objective is nondecreasing.
        double value = 0;
        double prev = -1;
        for (int iter = 0; iter < 100; iter++) {
            ComplexMatrix y = difference_output(phi);
            EigResult eig_y = eig_hermitian(y);
            double f = 0;
            for (double lambda : eig_y.eigenvalues) {
                f += std::abs(lambda);
            }
            value = f;
            if (f <= prev + 1e-12) {
                break;
            }
            prev = f;
            ComplexMatrix p = sign_of(eig_y);
            ComplexMatrix g(big, big);
            for (const auto &[sign, kx] : ext) {
                g = g + sign * (dagger(kx) * p * kx);
            }
            EigResult eig_g = eig_hermitian(g);
            for (size_t i = 0; i < big; i++) {
                phi[i] = eig_g.eigenvectors(i, big - 1);
            }
            normalize(phi);
        }
        best = std::max(best, value);
    }
    return best;
}

}  // namespace honestq
