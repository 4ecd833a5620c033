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

#include "honestq/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace honestq {

namespace {

std::vector<double> affine(
    const std::vector<double> &centroid, const std::vector<double> &vertex, double coeff) {
    std::vector<double> out(centroid.size());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = centroid[i] + coeff * (centroid[i] - vertex[i]);
    }
    return out;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &f,
    const std::vector<double> &x0,
    const NelderMeadOptions &opts) {
    const size_t n = x0.size();
    NelderMeadResult res;
    if (n == 0) {
        res.x = x0;
        res.f = f(x0);
        res.evaluations = 1;
        res.converged = true;
        return res;
    }

    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (size_t i = 0; i < n; i++) {
        simplex[i + 1][i] += opts.initial_step;
    }
    std::vector<double> values(n + 1);
    for (size_t i = 0; i <= n; i++) {
        values[i] = f(simplex[i]);
        res.evaluations++;
    }

    std::vector<size_t> order(n + 1);
    for (int iter = 0; iter < opts.max_iters; iter++) {
        res.iterations = iter + 1;
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return values[a] < values[b];
        });
        size_t best = order[0], second_worst = order[n - 1], worst = order[n];

        double f_spread = values[worst] - values[best];
        double x_spread = 0;
        for (size_t i = 0; i <= n; i++) {
            for (size_t j = 0; j < n; j++) {
                x_spread = std::max(x_spread, std::abs(simplex[i][j] - simplex[best][j]));
            }
        }
        if (f_spread <= opts.f_tol && x_spread <= opts.x_tol) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i <= n; i++) {
            if (i == worst) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                centroid[j] += simplex[i][j];
            }
        }
        for (size_t j = 0; j < n; j++) {
            centroid[j] /= static_cast<double>(n);
        }

        std::vector<double> refl = affine(centroid, simplex[worst], 1.0);
        double f_refl = f(refl);
        res.evaluations++;

        if (f_refl < values[best]) {
            std::vector<double> expand = affine(centroid, simplex[worst], 2.0);
            double f_expand = f(expand);
            res.evaluations++;
            if (f_expand < f_refl) {
                simplex[worst] = std::move(expand);
                values[worst] = f_expand;
            } else {
                simplex[worst] = std::move(refl);
                values[worst] = f_refl;
            }
        } else if (f_refl < values[second_worst]) {
            simplex[worst] = std::move(refl);
            values[worst] = f_refl;
        } else {
            bool outside = f_refl < values[worst];
            const std::vector<double> &toward = outside ? refl : simplex[worst];
            std::vector<double> contract(n);
            for (size_t j = 0; j < n; j++) {
                contract[j] = centroid[j] + 0.5 * (toward[j] - centroid[j]);
            }
            double f_contract = f(contract);
            res.evaluations++;
            if (f_contract < std::min(f_refl, values[worst])) {
                simplex[worst] = std::move(contract);
                values[worst] = f_contract;
            } else {
                // Shrink toward the best vertex.
                for (size_t i = 0; i <= n; i++) {
                    if (i == best) {
                        continue;
                    }
                    for (size_t j = 0; j < n; j++) {
                        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
                    }
                    values[i] = f(simplex[i]);
                    res.evaluations++;
                }
            }
        }
    }

    size_t best = 0;
    for (size_t i = 1; i <= n; i++) {
        if (values[i] < values[best]) {
            best = i;
        }
    }
    res.x = simplex[best];
    res.f = values[best];
    return res;
}

}  // namespace honestq
