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

#ifndef HONESTQ_NELDER_MEAD_HPP
#define HONESTQ_NELDER_MEAD_HPP

#include <functional>
#include <vector>

namespace honestq {

struct NelderMeadOptions {
    int max_iters = 2000;
    double f_tol = 1e-12;      // spread of simplex values
    double x_tol = 1e-12;      // spread of simplex vertices (max-abs)
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free minimization with the standard reflection, expansion,
/// contraction and shrink steps (coefficients 1, 2, 0.5, 0.5). The initial
/// simplex is axis-aligned around x0 with the given step.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &f,
    const std::vector<double> &x0,
    const NelderMeadOptions &opts = {});

}  // namespace honestq

#endif
