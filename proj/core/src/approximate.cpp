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

#include "honestq/approximate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "honestq/diamond.hpp"
#include "honestq/errors.hpp"
#include "honestq/nelder_mead.hpp"
#include "honestq/pauli.hpp"

namespace honestq {

namespace {

constexpr double kTieTol = 1e-8;
constexpr double kBoundaryTol = 1e-10;

uint64_t splitmix64_next(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(uint64_t &state) {
    return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

struct Evaluation {
    std::vector<double> probs;
    double diamond = 0;
    double cert_min_eig = 0;
    double objective = 0;
};

class MixtureObjective {
  public:
    MixtureObjective(
        const QuantumChannel &target, const std::vector<ComplexMatrix> &ops, double penalty)
        : target_(target), ops_(ops), penalty_(penalty) {}

    QuantumChannel mixture_channel(const std::vector<double> &probs) const {
        std::vector<ComplexMatrix> kraus;
        for (size_t i = 0; i < ops_.size(); i++) {
            if (probs[i] > 1e-15) {
                kraus.push_back(std::sqrt(probs[i]) * ops_[i]);
            }
        }
        if (kraus.empty()) {
            kraus.push_back(ops_[0]);
        }
        return QuantumChannel::from_kraus(target_.n_qubits, std::move(kraus));
    }

    double cert_min_eig(const std::vector<double> &probs) const {
        QuantumChannel mix = mixture_channel(probs);
        HonestyCertificate cert = certify(kraus_to_bloch(mix).m, target_);
        return cert.min_eig_a_minus_b;
    }

    Evaluation evaluate(const std::vector<double> &probs) const {
        Evaluation ev;
        ev.probs = probs;
        QuantumChannel mix = mixture_channel(probs);
        HonestyCertificate cert = certify(kraus_to_bloch(mix).m, target_);
        ev.cert_min_eig = cert.min_eig_a_minus_b;
        ev.diamond = diamond_distance(mix, target_).value;
        ev.objective = ev.diamond + penalty_ * std::max(0.0, -ev.cert_min_eig);
        return ev;
    }

  private:
    const QuantumChannel &target_;
    const std::vector<ComplexMatrix> &ops_;
    double penalty_;
};

/// Bisect the honesty boundary along [from, to], where `from` is honest and
/// `to` is not. Returns the honest endpoint of the final bracket.
std::vector<double> bisect_boundary(
    const MixtureObjective &obj, std::vector<double> honest, std::vector<double> dishonest) {
    for (int i = 0; i < 80; i++) {
        std::vector<double> mid(honest.size());
        double spread = 0;
        for (size_t j = 0; j < honest.size(); j++) {
            mid[j] = 0.5 * (honest[j] + dishonest[j]);
            spread = std::max(spread, std::abs(honest[j] - dishonest[j]));
        }
        if (spread < kBoundaryTol) {
            break;
        }
        if (obj.cert_min_eig(mid) >= 0) {
            honest = std::move(mid);
        } else {
            dishonest = std::move(mid);
        }
    }
    return honest;
}

std::vector<double> chi_diag_of(const QuantumChannel &ch) {
    ChiMatrix chi = kraus_to_chi(ch);
    std::vector<double> out(chi.chi.rows());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = chi.chi(i, i).real();
    }
    return out;
}

bool lex_less(const std::vector<double> &a, const std::vector<double> &b) {
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] - b[i]) > 1e-12) {
            return a[i] < b[i];
        }
    }
    return false;
}

/// If every mixing op coincides with a Pauli basis element, the target's chi
/// diagonal restricted to those elements is a natural candidate mixture. For
/// honest Pauli targets it is exact and makes the diamond distance vanish.
std::optional<std::vector<double>> chi_injection_candidate(
    const QuantumChannel &target, const std::vector<ComplexMatrix> &ops) {
    const auto &basis = pauli_basis(target.n_qubits);
    ChiMatrix chi = kraus_to_chi(target);
    std::vector<double> cand(ops.size(), 0.0);
    double total = 0;
    for (size_t i = 0; i < ops.size(); i++) {
        bool matched = false;
        for (size_t m = 0; m < basis.size(); m++) {
            if (max_abs(ops[i] - basis[m]) < 1e-12) {
                cand[i] = std::max(0.0, chi.chi(m, m).real());
                total += cand[i];
                matched = true;
                break;
            }
        }
        if (!matched) {
            return std::nullopt;
        }
    }
    if (total < 1e-12) {
        return std::nullopt;
    }
    for (auto &p : cand) {
        p /= total;
    }
    return cand;
}

}  // namespace

std::vector<double> project_to_simplex(const std::vector<double> &x) {
    const size_t n = x.size();
    std::vector<double> u = x;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0;
    double theta = 0;
    size_t rho = 0;
    for (size_t i = 0; i < n; i++) {
        css += u[i];
        double t = (css - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            rho = i;
            theta = t;
        }
    }
    (void)rho;
    std::vector<double> out(n);
    double total = 0;
    for (size_t i = 0; i < n; i++) {
        out[i] = std::max(0.0, x[i] - theta);
        total += out[i];
    }
    // Guard against accumulated rounding so downstream invariants hold.
    for (auto &p : out) {
        p /= total;
    }
    return out;
}

QuantumChannel MixtureChannel::to_channel(int n_qubits) const {
    if (ops.size() != probs.size() || ops.empty()) {
        throw InvalidChannelError("MixtureChannel: ops/probs size mismatch");
    }
    double total = 0;
    for (double p : probs) {
        if (p < -1e-12) {
            throw BadProbabilityError("MixtureChannel: negative probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw BadProbabilityError("MixtureChannel: probabilities sum to " + std::to_string(total));
    }
    std::vector<ComplexMatrix> kraus;
    for (size_t i = 0; i < ops.size(); i++) {
        if (probs[i] > 1e-15) {
            kraus.push_back(std::sqrt(probs[i]) * ops[i]);
        }
    }
    return QuantumChannel::from_kraus(n_qubits, std::move(kraus));
}

ApproximationResult approximate(
    const QuantumChannel &ch, const std::vector<ComplexMatrix> &mixing_set, const OptimizerOptions &opts) {
    const size_t k = mixing_set.size();
    const size_t d = ch.dim();
    if (k == 0) {
        throw InvalidChannelError("approximate: empty mixing set");
    }
    for (const auto &u : mixing_set) {
        if (u.rows() != d || u.cols() != d) {
            throw DimensionMismatchError("approximate: mixing set dimension mismatch");
        }
        if (max_abs(dagger(u) * u - ComplexMatrix::identity(d)) > 1e-10) {
            throw InvalidChannelError("approximate: mixing set contains a non-unitary");
        }
    }
    if (max_abs(mixing_set[0] - ComplexMatrix::identity(d)) > 1e-12) {
        throw InvalidChannelError("approximate: mixing set must start with the identity");
    }

    MixtureObjective obj(ch, mixing_set, opts.penalty_weight);

    ApproximationResult result;

    std::vector<double> e_identity(k, 0.0);
    e_identity[0] = 1.0;
    std::vector<double> uniform(k, 1.0 / static_cast<double>(k));

    // Degenerate target: the identity mixture is exact and trivially honest.
    {
        QuantumChannel id_ch = QuantumChannel::from_kraus(
            ch.n_qubits, {ComplexMatrix::identity(d)});
        if (max_abs(kraus_to_choi(ch) - kraus_to_choi(id_ch)) < 1e-12) {
            result.mixture.ops = mixing_set;
            result.mixture.probs = e_identity;
            result.chi_diag = chi_diag_of(id_ch);
            result.diamond_dist = 0;
            result.certificate = certify(kraus_to_bloch(id_ch).m, ch);
            return result;
        }
    }

    std::optional<std::vector<double>> injection = chi_injection_candidate(ch, mixing_set);

    auto run_restart = [&](int restart) {
        std::vector<double> x0;
        if (restart == 0) {
            x0 = uniform;
        } else if (restart == 1 && injection.has_value()) {
            x0 = *injection;
        } else {
            uint64_t st = split_seed(opts.seed, static_cast<uint64_t>(restart));
            x0.resize(k);
            double total = 0;
            for (size_t i = 0; i < k; i++) {
                x0[i] = -std::log(std::max(uniform01(st), 1e-300));
                total += x0[i];
            }
            for (auto &v : x0) {
                v /= total;
            }
        }

        auto f = [&](const std::vector<double> &x) {
            return obj.evaluate(project_to_simplex(x)).objective;
        };

        NelderMeadOptions nm;
        nm.max_iters = opts.max_iters;
        nm.initial_step = 0.05;
        nm.f_tol = 1e-11;
        nm.x_tol = 1e-9;
        NelderMeadResult coarse = nelder_mead(f, x0, nm);

        nm.initial_step = 1e-3;
        nm.max_iters = std::max(200, opts.max_iters / 4);
        NelderMeadResult fine = nelder_mead(f, coarse.x, nm);

        Evaluation ev = obj.evaluate(project_to_simplex(fine.x));

        // Land on the honesty boundary: the optima saturate the constraint, so
        // from an honest interior point push toward the identity mixture; from
        // a slightly infeasible point retreat toward the uniform mixture.
        if (ev.cert_min_eig >= 0) {
            if (obj.cert_min_eig(e_identity) < 0) {
                std::vector<double> p = bisect_boundary(obj, ev.probs, e_identity);
                Evaluation refined = obj.evaluate(p);
                if (refined.objective <= ev.objective + 1e-9) {
                    ev = refined;
                }
            }
        } else if (obj.cert_min_eig(uniform) >= 0) {
            std::vector<double> p = bisect_boundary(obj, uniform, ev.probs);
            ev = obj.evaluate(p);
        }

        RestartTrace tr;
        tr.restart = restart;
        tr.objective = ev.objective;
        tr.diamond = ev.diamond;
        tr.cert_min_eig = ev.cert_min_eig;
        tr.iterations = coarse.iterations + fine.iterations;
        tr.feasible = ev.cert_min_eig >= -kCertificateTol;
        return std::make_pair(tr, ev);
    };

    std::optional<Evaluation> best;
    std::vector<double> best_chi;
    for (int restart = 0; restart < std::max(1, opts.restarts); restart++) {
        auto [tr, ev] = run_restart(restart);
        result.trace.push_back(tr);
        if (!tr.feasible) {
            continue;
        }
        std::vector<double> ev_chi = chi_diag_of(obj.mixture_channel(ev.probs));
        bool take = false;
        if (!best.has_value()) {
            take = true;
        } else if (ev.diamond < best->diamond - kTieTol) {
            take = true;
        } else if (ev.diamond <= best->diamond + kTieTol) {
            if (ev_chi[0] > best_chi[0] + 1e-12) {
                take = true;
            } else if (std::abs(ev_chi[0] - best_chi[0]) <= 1e-12 && lex_less(ev.probs, best->probs)) {
                take = true;
            }
        }
        if (take) {
            best = ev;
            best_chi = ev_chi;
        }
    }

    if (!best.has_value()) {
        throw InfeasibleError("approximate: no honest mixture found over the given set");
    }

    // The optimum can be degenerate (a flat set of mixtures at the same
    // diamond distance). Resolve the tie by maximizing chi00 over the
    // near-optimal honest set, as the tie-break rule requires.
    {
        const double d_star = best->diamond;
        auto g = [&](const std::vector<double> &x) {
            std::vector<double> p = project_to_simplex(x);
            Evaluation ev = obj.evaluate(p);
            double chi00 = chi_diag_of(obj.mixture_channel(p))[0];
            return -chi00 + opts.penalty_weight * std::max(0.0, -ev.cert_min_eig) +
                   opts.penalty_weight * std::max(0.0, ev.diamond - d_star - opts.tie_break_window);
        };
        NelderMeadOptions nm;
        nm.max_iters = std::max(200, opts.max_iters / 4);
        nm.initial_step = 0.01;
        nm.f_tol = 1e-12;
        nm.x_tol = 1e-10;
        NelderMeadResult ref = nelder_mead(g, best->probs, nm);
        Evaluation ev = obj.evaluate(project_to_simplex(ref.x));
        if (ev.cert_min_eig < 0 && obj.cert_min_eig(uniform) >= 0) {
            ev = obj.evaluate(bisect_boundary(obj, uniform, ev.probs));
        }
        if (ev.cert_min_eig >= -kCertificateTol && ev.diamond <= d_star + opts.tie_break_window) {
            std::vector<double> ev_chi = chi_diag_of(obj.mixture_channel(ev.probs));
            if (ev_chi[0] > best_chi[0] + 1e-12) {
                best = ev;
                best_chi = ev_chi;
            }
        }
    }

    QuantumChannel mix = obj.mixture_channel(best->probs);
    result.mixture.ops = mixing_set;
    result.mixture.probs = best->probs;
    for (auto &p : result.mixture.probs) {
        if (p < 1e-14) {
            p = 0;
        }
    }
    {
        double total = std::accumulate(
            result.mixture.probs.begin(), result.mixture.probs.end(), 0.0);
        for (auto &p : result.mixture.probs) {
            p /= total;
        }
    }
    result.chi_diag = best_chi;
    result.diamond_dist = best->diamond;
    result.certificate = certify(kraus_to_bloch(mix).m, ch);
    if (ch.n_qubits > 1) {
        result.has_empirical = true;
        result.empirical = empirical_honesty_check(
            mix, ch, opts.empirical_samples, split_seed(opts.seed, 0x9e37ULL));
    }
    return result;
}

ApproximationResult approximate_pauli(const QuantumChannel &ch, const OptimizerOptions &opts) {
    if (ch.n_qubits > 2) {
        throw DimensionMismatchError("approximate_pauli: supports one or two qubits");
    }
    return approximate(ch, pauli_basis(ch.n_qubits), opts);
}

ApproximationResult approximate_two_qubit_sparse(
    const QuantumChannel &ch, const std::vector<std::string> &support, const OptimizerOptions &opts) {
    if (ch.n_qubits != 2) {
        throw DimensionMismatchError("approximate_two_qubit_sparse: two-qubit channels only");
    }
    const auto &basis = pauli_basis(2);
    std::vector<ComplexMatrix> ops;
    bool has_identity = false;
    for (const auto &label : support) {
        int idx = pauli_index(2, label);
        if (idx == 0) {
            has_identity = true;
            ops.insert(ops.begin(), basis[0]);
        } else {
            ops.push_back(basis[idx]);
        }
    }
    if (!has_identity) {
        throw InvalidChannelError("approximate_two_qubit_sparse: support must include ii");
    }
    return approximate(ch, ops, opts);
}

MixtureChannel exact_dephasing_match(double theta, const std::array<double, 3> &axis) {
    double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw BadAxisError("exact_dephasing_match: axis must be a unit vector");
    }
    double p = std::abs(std::sin(theta / 2.0));
    MixtureChannel out;
    out.ops = {ComplexMatrix::identity(2), axis_dot_sigma(axis)};
    out.probs = {1.0 - p, p};
    return out;
}

}  // namespace honestq
