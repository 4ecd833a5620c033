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

#include "honestq/sdp.hpp"

#include <algorithm>
#include <cmath>

namespace honestq {

namespace {

using BlockVec = std::vector<ComplexMatrix>;

BlockVec make_blocks(const std::vector<size_t> &dims) {
    BlockVec out;
    out.reserve(dims.size());
    for (size_t d : dims) {
        out.emplace_back(d, d);
    }
    return out;
}

BlockVec identity_blocks(const std::vector<size_t> &dims, double scale) {
    BlockVec out;
    out.reserve(dims.size());
    for (size_t d : dims) {
        out.push_back(scale * ComplexMatrix::identity(d));
    }
    return out;
}

double bv_dot(const BlockVec &a, const BlockVec &b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        const auto &x = a[i];
        const auto &y = b[i];
        for (size_t r = 0; r < x.rows(); r++) {
            for (size_t c = 0; c < x.cols(); c++) {
                s += (x(r, c) * y(c, r)).real();
            }
        }
    }
    return s;
}

double bv_max_abs(const BlockVec &a) {
    double worst = 0;
    for (const auto &m : a) {
        worst = std::max(worst, max_abs(m));
    }
    return worst;
}

void bv_symmetrize(BlockVec &a) {
    for (auto &m : a) {
        for (size_t r = 0; r < m.rows(); r++) {
            for (size_t c = r; c < m.cols(); c++) {
                cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
                m(r, c) = v;
                m(c, r) = std::conj(v);
            }
        }
    }
}

// <A_k, X> for every constraint.
std::vector<double> apply_constraints(const SdpProblem &p, const BlockVec &x) {
    std::vector<double> out(p.constraints.size());
    for (size_t k = 0; k < p.constraints.size(); k++) {
        double s = 0;
        for (const auto &t : p.constraints[k].terms) {
            s += (t.value * x[t.block](t.col, t.row)).real();
        }
        out[k] = s;
    }
    return out;
}

// sum_k y_k A_k.
BlockVec adjoint_constraints(const SdpProblem &p, const std::vector<double> &y) {
    BlockVec out = make_blocks(p.block_dims);
    for (size_t k = 0; k < p.constraints.size(); k++) {
        double yk = y[k];
        if (yk == 0) {
            continue;
        }
        for (const auto &t : p.constraints[k].terms) {
            out[t.block](t.row, t.col) += yk * t.value;
        }
    }
    return out;
}

struct HermEig {
    std::vector<double> values;
    ComplexMatrix vectors;
};

// f(H) through the eigendecomposition, assuming H Hermitian PD-ish.
ComplexMatrix herm_function(const HermEig &eig, double (*f)(double)) {
    size_t n = eig.values.size();
    ComplexMatrix out(n, n);
    for (size_t l = 0; l < n; l++) {
        double fl = f(eig.values[l]);
        for (size_t r = 0; r < n; r++) {
            cplx vl = eig.vectors(r, l) * fl;
            for (size_t c = 0; c < n; c++) {
                out(r, c) += vl * std::conj(eig.vectors(c, l));
            }
        }
    }
    return out;
}

bool herm_eig(const ComplexMatrix &m, HermEig &out) {
    EigResult e = eig_hermitian(m);
    out.values = std::move(e.eigenvalues);
    out.vectors = std::move(e.eigenvectors);
    return true;
}

// Lower Cholesky factor; false if not positive definite.
bool cholesky(const ComplexMatrix &a, ComplexMatrix &l) {
    size_t n = a.rows();
    l = ComplexMatrix(n, n);
    for (size_t j = 0; j < n; j++) {
        double d = a(j, j).real();
        for (size_t k = 0; k < j; k++) {
            d -= std::norm(l(j, k));
        }
        if (d <= 0 || !std::isfinite(d)) {
            return false;
        }
        double dj = std::sqrt(d);
        l(j, j) = dj;
        for (size_t i = j + 1; i < n; i++) {
            cplx s = a(i, j);
            for (size_t k = 0; k < j; k++) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / dj;
        }
    }
    return true;
}

// Solves L Y = B in place by forward substitution (L lower triangular).
ComplexMatrix forward_solve(const ComplexMatrix &l, const ComplexMatrix &b) {
    size_t n = l.rows();
    ComplexMatrix y = b;
    for (size_t c = 0; c < b.cols(); c++) {
        for (size_t r = 0; r < n; r++) {
            cplx s = y(r, c);
            for (size_t k = 0; k < r; k++) {
                s -= l(r, k) * y(k, c);
            }
            y(r, c) = s / l(r, r);
        }
    }
    return y;
}

// Largest step alpha with X + alpha dX staying PSD; infinity capped to 1e30.
double max_step(const ComplexMatrix &x, const ComplexMatrix &dx) {
    ComplexMatrix l;
    if (!cholesky(x, l)) {
        return 0;
    }
    ComplexMatrix y = forward_solve(l, dx);
    ComplexMatrix n = dagger(forward_solve(l, dagger(y)));
    // n = L^-1 dX L^-dag, Hermitian up to rounding.
    for (size_t r = 0; r < n.rows(); r++) {
        for (size_t c = r; c < n.cols(); c++) {
            cplx v = 0.5 * (n(r, c) + std::conj(n(c, r)));
            n(r, c) = v;
            n(c, r) = std::conj(v);
        }
    }
    double lmin = min_eigenvalue(n);
    if (lmin >= -1e-30) {
        return 1e30;
    }
    return -1.0 / lmin;
}

double bv_max_step(const BlockVec &x, const BlockVec &dx) {
    double a = 1e30;
    for (size_t i = 0; i < x.size(); i++) {
        a = std::min(a, max_step(x[i], dx[i]));
    }
    return a;
}

// Dense symmetric positive definite solve with jittered Cholesky retries.
bool spd_solve(std::vector<double> &m, size_t n, std::vector<double> &rhs) {
    for (int attempt = 0; attempt < 3; attempt++) {
        std::vector<double> l(m);
        bool ok = true;
        for (size_t j = 0; j < n && ok; j++) {
            double d = l[j * n + j];
            for (size_t k = 0; k < j; k++) {
                d -= l[j * n + k] * l[j * n + k];
            }
            if (d <= 0 || !std::isfinite(d)) {
                ok = false;
                break;
            }
            double dj = std::sqrt(d);
            l[j * n + j] = dj;
            for (size_t i = j + 1; i < n; i++) {
                double s = l[i * n + j];
                for (size_t k = 0; k < j; k++) {
                    s -= l[i * n + k] * l[j * n + k];
                }
                l[i * n + j] = s / dj;
            }
        }
        if (!ok) {
            double jitter = 0;
            for (size_t i = 0; i < n; i++) {
                jitter = std::max(jitter, std::abs(m[i * n + i]));
            }
            jitter = std::max(jitter, 1.0) * 1e-12 * std::pow(10.0, attempt);
            for (size_t i = 0; i < n; i++) {
                m[i * n + i] += jitter;
            }
            continue;
        }
        // Forward then backward substitution.
        for (size_t r = 0; r < n; r++) {
            double s = rhs[r];
            for (size_t k = 0; k < r; k++) {
                s -= l[r * n + k] * rhs[k];
            }
            rhs[r] = s / l[r * n + r];
        }
        for (size_t r = n; r-- > 0;) {
            double s = rhs[r];
            for (size_t k = r + 1; k < n; k++) {
                s -= l[k * n + r] * rhs[k];
            }
            rhs[r] = s / l[r * n + r];
        }
        return true;
    }
    return false;
}

double f_sqrt(double x) {
    return std::sqrt(std::max(x, 1e-300));
}
double f_inv_sqrt(double x) {
    return 1.0 / std::sqrt(std::max(x, 1e-300));
}
double f_inv(double x) {
    return 1.0 / (std::abs(x) < 1e-300 ? 1e-300 : x);
}

}  // namespace

SdpResult solve_sdp(const SdpProblem &problem, double gap_tol, int max_iter) {
    const size_t m = problem.constraints.size();
    const size_t nblocks = problem.block_dims.size();
    double nu = 0;
    for (size_t d : problem.block_dims) {
        nu += static_cast<double>(d);
    }

    std::vector<double> b(m);
    double b_scale = 1;
    for (size_t k = 0; k < m; k++) {
        b[k] = problem.constraints[k].rhs;
        b_scale = std::max(b_scale, std::abs(b[k]));
    }
    double c_scale = std::max(1.0, bv_max_abs(problem.objective));

    BlockVec x = identity_blocks(problem.block_dims, 1.0);
    BlockVec z = identity_blocks(problem.block_dims, std::max(1.0, c_scale));
    std::vector<double> y(m, 0.0);

    SdpResult result;
    result.info.status = SdpStatus::max_iter;

    std::vector<HermEig> z_eig(nblocks);
    BlockVec w, z_inv;
    std::vector<double> schur(m * m);
    BlockVec scratch = make_blocks(problem.block_dims);

    auto sandwich = [&](const BlockVec &mid, const BlockVec &outer) {
        BlockVec out;
        out.reserve(nblocks);
        for (size_t i = 0; i < nblocks; i++) {
            out.push_back(outer[i] * mid[i] * outer[i]);
        }
        return out;
    };

    int it = 0;
    int stall_count = 0;
    for (; it < max_iter; it++) {
        // Residuals and convergence test.
        std::vector<double> ax = apply_constraints(problem, x);
        std::vector<double> rp(m);
        double pinf = 0;
        for (size_t k = 0; k < m; k++) {
            rp[k] = b[k] - ax[k];
            pinf = std::max(pinf, std::abs(rp[k]));
        }
        BlockVec rd = adjoint_constraints(problem, y);
        for (size_t i = 0; i < nblocks; i++) {
            rd[i] = rd[i] - problem.objective[i] - z[i];
        }
        double dinf = bv_max_abs(rd);
        double gap = bv_dot(x, z);
        double primal = bv_dot(problem.objective, x);
        double dual = 0;
        for (size_t k = 0; k < m; k++) {
            dual += b[k] * y[k];
        }
        result.info.primal = primal;
        result.info.dual = dual;
        result.info.gap = std::abs(primal - dual);
        result.info.iterations = it;
        double feas_tol = std::min(1e-9, gap_tol) * std::max(1.0, std::max(b_scale, c_scale));
        if (gap <= gap_tol && result.info.gap <= gap_tol && pinf <= feas_tol && dinf <= feas_tol) {
            result.info.status = SdpStatus::optimal;
            break;
        }

        // Nesterov-Todd scaling point: W Z W = X.
        bool ok = true;
        w = make_blocks(problem.block_dims);
        z_inv = make_blocks(problem.block_dims);
        for (size_t i = 0; i < nblocks && ok; i++) {
            HermEig ze;
            ok = herm_eig(z[i], ze);
            if (!ok || ze.values.front() <= 0) {
                ok = false;
                break;
            }
            ComplexMatrix zs = herm_function(ze, f_sqrt);
            ComplexMatrix zis = herm_function(ze, f_inv_sqrt);
            z_inv[i] = herm_function(ze, f_inv);
            HermEig ge;
            ok = herm_eig(zs * x[i] * zs, ge);
            if (!ok || ge.values.front() <= 0) {
                ok = false;
                break;
            }
            w[i] = zis * herm_function(ge, f_sqrt) * zis;
        }
        if (!ok) {
            break;
        }

        // Schur complement M_ij = <A_i, W A_j W>.
        std::fill(schur.begin(), schur.end(), 0.0);
        for (size_t j = 0; j < m; j++) {
            for (auto &blk : scratch) {
                blk = ComplexMatrix(blk.rows(), blk.cols());
            }
            for (const auto &t : problem.constraints[j].terms) {
                const auto &wb = w[t.block];
                auto &out = scratch[t.block];
                size_t n = wb.rows();
                for (size_t r = 0; r < n; r++) {
                    cplx left = t.value * wb(r, t.row);
                    if (left == cplx(0, 0)) {
                        continue;
                    }
                    for (size_t c = 0; c < n; c++) {
                        out(r, c) += left * wb(t.col, c);
                    }
                }
            }
            for (size_t i = 0; i < m; i++) {
                double s = 0;
                for (const auto &t : problem.constraints[i].terms) {
                    s += (t.value * scratch[t.block](t.col, t.row)).real();
                }
                schur[i * m + j] = s;
            }
        }
        for (size_t i = 0; i < m; i++) {
            for (size_t j = i + 1; j < m; j++) {
                double v = 0.5 * (schur[i * m + j] + schur[j * m + i]);
                schur[i * m + j] = v;
                schur[j * m + i] = v;
            }
        }

        BlockVec w_rd_w = sandwich(rd, w);

        auto solve_direction = [&](double mu_target, BlockVec &dx, BlockVec &dz, std::vector<double> &dy) -> bool {
            BlockVec sc;
            sc.reserve(nblocks);
            for (size_t i = 0; i < nblocks; i++) {
                sc.push_back(mu_target * z_inv[i] - x[i]);
            }
            std::vector<double> q(m);
            for (size_t k = 0; k < m; k++) {
                double s = 0;
                for (const auto &t : problem.constraints[k].terms) {
                    s += (t.value * (sc[t.block](t.col, t.row) - w_rd_w[t.block](t.col, t.row))).real();
                }
                q[k] = s - rp[k];
            }
            std::vector<double> schur_copy = schur;
            if (!spd_solve(schur_copy, m, q)) {
                return false;
            }
            dy = q;
            dz = adjoint_constraints(problem, dy);
            for (size_t i = 0; i < nblocks; i++) {
                dz[i] = dz[i] + rd[i];
            }
            BlockVec w_dz_w = sandwich(dz, w);
            dx.clear();
            dx.reserve(nblocks);
            for (size_t i = 0; i < nblocks; i++) {
                dx.push_back(sc[i] - w_dz_w[i]);
            }
            bv_symmetrize(dx);
            bv_symmetrize(dz);
            return true;
        };

        // Predictor for the adaptive centering weight.
        BlockVec dx_aff, dz_aff;
        std::vector<double> dy_aff;
        if (!solve_direction(0.0, dx_aff, dz_aff, dy_aff)) {
            break;
        }
        double ap_aff = std::min(1.0, 0.98 * bv_max_step(x, dx_aff));
        double ad_aff = std::min(1.0, 0.98 * bv_max_step(z, dz_aff));
        double gap_aff = 0;
        {
            BlockVec xa = x, za = z;
            for (size_t i = 0; i < nblocks; i++) {
                xa[i] = xa[i] + ap_aff * dx_aff[i];
                za[i] = za[i] + ad_aff * dz_aff[i];
            }
            gap_aff = bv_dot(xa, za);
        }
        double sigma = std::clamp(std::pow(std::max(gap_aff, 0.0) / std::max(gap, 1e-300), 3.0), 1e-6, 0.9);

        BlockVec dx, dz;
        std::vector<double> dy;
        if (!solve_direction(sigma * gap / nu, dx, dz, dy)) {
            break;
        }
        double ap = std::min(1.0, 0.98 * bv_max_step(x, dx));
        double ad = std::min(1.0, 0.98 * bv_max_step(z, dz));
        for (size_t i = 0; i < nblocks; i++) {
            x[i] = x[i] + ap * dx[i];
            z[i] = z[i] + ad * dz[i];
        }
        for (size_t k = 0; k < m; k++) {
            y[k] += ad * dy[k];
        }
        if (std::min(ap, ad) < 1e-8) {
            if (++stall_count >= 5) {
                break;
            }
        } else {
            stall_count = 0;
        }
    }

    result.x = std::move(x);
    result.y = std::move(y);
    if (result.info.status != SdpStatus::optimal) {
        result.info.iterations = it;
    }
    return result;
}

}  // namespace honestq
