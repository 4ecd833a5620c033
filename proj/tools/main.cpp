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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "golden_tables.hpp"

#include "honestq/approximate.hpp"
#include "honestq/channel_io.hpp"
#include "honestq/diamond.hpp"
#include "honestq/errors.hpp"
#include "honestq/honesty.hpp"
#include "honestq/pauli.hpp"
#include "honestq/presets.hpp"
#include "honestq/twirl.hpp"

namespace {

using nlohmann::json;
using namespace honestq;

constexpr const char *kVersion = "1.0.0";

// Exit codes, also documented in the README: 0 ok, 1 parse or input error,
// 2 infeasible, 3 solver failure, 4 dishonest, 5 table mismatch.
constexpr int kExitParse = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSolver = 3;
constexpr int kExitDishonest = 4;
constexpr int kExitTableMismatch = 5;

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

ComplexMatrix z90_gate() {
    ComplexMatrix z90(2, 2);
    const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
    z90(0, 0) = cplx(c, -s);
    z90(1, 1) = cplx(c, s);
    return z90;
}

ComplexMatrix hadamard_gate() {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = h;
    m(0, 1) = h;
    m(1, 0) = h;
    m(1, 1) = -h;
    return m;
}

std::vector<ComplexMatrix> parse_custom_set(const std::string &path, size_t dim) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open mixing-set file: " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("mixing-set file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("ops") || !doc["ops"].is_array()) {
        throw ParseError("mixing-set file: expected {\"ops\": [matrix, ...]}");
    }
    std::vector<ComplexMatrix> ops;
    for (const auto &mat : doc["ops"]) {
        ComplexMatrix m(dim, dim);
        if (!mat.is_array() || mat.size() != dim) {
            throw ParseError("mixing-set file: each op must be a " + std::to_string(dim) +
                             "-row matrix");
        }
        for (size_t r = 0; r < dim; r++) {
            if (!mat[r].is_array() || mat[r].size() != dim) {
                throw ParseError("mixing-set file: ragged op matrix");
            }
            for (size_t c = 0; c < dim; c++) {
                const auto &e = mat[r][c];
                if (!e.is_array() || e.size() != 2) {
                    throw ParseError("mixing-set file: entries must be [re, im] pairs");
                }
                m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
            }
        }
        ops.push_back(std::move(m));
    }
    // The optimizer wants the identity first; accept it anywhere in the file.
    for (size_t i = 0; i < ops.size(); i++) {
        if (max_abs(ops[i] - ComplexMatrix::identity(dim)) < 1e-12) {
            std::swap(ops[0], ops[i]);
            return ops;
        }
    }
    throw ParseError("mixing-set file: the set must contain the identity");
}

std::vector<ComplexMatrix> build_mixing_set(const std::string &name, int n_qubits) {
    if (name == "pauli") {
        return pauli_basis(n_qubits);
    }
    if (name == "pauli+H" || name == "pauli+Z90") {
        if (n_qubits != 1) {
            throw ParseError("--set " + name + " is single-qubit only");
        }
        std::vector<ComplexMatrix> set = pauli_basis(1);
        set.push_back(name == "pauli+H" ? hadamard_gate() : z90_gate());
        return set;
    }
    if (name.rfind("custom:", 0) == 0) {
        return parse_custom_set(name.substr(7), size_t{1} << n_qubits);
    }
    throw ParseError("unknown mixing set: " + name +
                     " (expected pauli, pauli+H, pauli+Z90, or custom:<file>)");
}

json certificate_to_json(const HonestyCertificate &cert) {
    const char *mode = cert.mode == HonestyMode::unital           ? "unital"
                       : cert.mode == HonestyMode::non_unital     ? "non-unital"
                                                                  : "multi-qubit-conjectural";
    return json{
        {"mode", mode},
        {"min_eig_a_minus_b", cert.min_eig_a_minus_b},
        {"tol", cert.tol},
        {"pass", cert.pass},
    };
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write file: " + path);
    }
    out << content;
}

int cmd_approximate(
    const std::string &channel_path, const std::string &set_name,
    const std::vector<std::string> &support, uint64_t seed, int restarts, int max_iters,
    const std::string &out_path) {
    ChannelDocument doc = load_channel_file(channel_path);

    OptimizerOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.max_iters = max_iters;

    ApproximationResult res;
    if (!support.empty()) {
        if (doc.channel.n_qubits != 2) {
            throw ParseError("--support applies to two-qubit channels only");
        }
        res = approximate_two_qubit_sparse(doc.channel, support, opts);
    } else {
        res = approximate(doc.channel, build_mixing_set(set_name, doc.channel.n_qubits), opts);
    }

    std::printf("label: %s\n", doc.label.empty() ? "(none)" : doc.label.c_str());
    std::printf("set: %s\n", support.empty() ? set_name.c_str() : "sparse-pauli");
    std::printf("probs:");
    for (double p : res.mixture.probs) {
        std::printf(" %.6f", p);
    }
    std::printf("\nchi_diag:");
    for (double v : res.chi_diag) {
        std::printf(" %.6f", v);
    }
    std::printf("\ndiamond_dist = %.6f\n", res.diamond_dist);
    std::printf("certificate: min_eig = %.3e, pass = %s\n",
                res.certificate.min_eig_a_minus_b, res.certificate.pass ? "yes" : "no");
    if (res.has_empirical) {
        std::printf("empirical max violation = %.3e over %zu samples\n",
                    res.empirical.max_violation, res.empirical.n_samples);
    }

    if (!out_path.empty()) {
        json report;
        report["version"] = kVersion;
        report["timestamp"] = utc_timestamp();
        report["command"] = "approximate";
        report["input"] = {{"file", channel_path}, {"label", doc.label}, {"digest", doc.digest}};
        report["options"] = {
            {"set", support.empty() ? set_name : "sparse-pauli"},
            {"support", support},
            {"seed", seed},
            {"restarts", restarts},
            {"max_iters", max_iters},
            {"penalty_weight", opts.penalty_weight},
            {"tie_break_window", opts.tie_break_window},
        };
        report["result"] = {
            {"probs", res.mixture.probs},
            {"chi_diag", res.chi_diag},
            {"diamond_dist", res.diamond_dist},
            {"certificate", certificate_to_json(res.certificate)},
        };
        if (res.has_empirical) {
            report["result"]["empirical"] = {
                {"max_violation", res.empirical.max_violation},
                {"n_samples", res.empirical.n_samples},
                {"seed", res.empirical.seed},
            };
        }
        json trace = json::array();
        for (const auto &t : res.trace) {
            trace.push_back({
                {"restart", t.restart},
                {"diamond", t.diamond},
                {"cert_min_eig", t.cert_min_eig},
                {"feasible", t.feasible},
                {"iterations", t.iterations},
            });
        }
        report["trace"] = trace;
        write_text_file(out_path, report.dump(2) + "\n");
    }
    return 0;
}

struct ComputedCell {
    std::string table, row, column;
    double computed = 0;
};

std::vector<ComputedCell> compute_table1_like(const std::vector<std::string> &rows, uint64_t seed) {
    OptimizerOptions opts;
    opts.seed = seed;
    std::vector<ComputedCell> out;
    for (const auto &nc : paper_defaults()) {
        std::string row = nc.label == "dephase-axis"   ? "L1"
                          : nc.label == "depolarizing" ? "L2"
                                                       : "L3-" + nc.label.substr(9);
        if (!rows.empty() && std::find(rows.begin(), rows.end(), row) == rows.end()) {
            continue;
        }
        ApproximationResult res = approximate_pauli(nc.channel, opts);
        const char *cols[] = {"chi00", "chi11", "chi22", "chi33"};
        for (int c = 0; c < 4; c++) {
            out.push_back({"1", row, cols[c], res.chi_diag[c]});
        }
        out.push_back({"1", row, "diamond", res.diamond_dist});
    }
    return out;
}

std::vector<ComputedCell> compute_table(const std::string &table, uint64_t seed) {
    std::vector<ComputedCell> out;
    if (table == "1") {
        return compute_table1_like({}, seed);
    }
    if (table == "2") {
        auto chi00 = [](const QuantumChannel &ch) {
            return kraus_to_chi(ch).chi(0, 0).real();
        };
        out.push_back({"2", "L1", "chi00", chi00(make_dephase_axis(0.01, rotation_axis(1)))});
        out.push_back({"2", "L2", "chi00", chi00(make_depolarizing(0.01))});
        out.push_back({"2", "L3-j", "chi00", chi00(make_rotation(0.02, rotation_axis(0)))});
        return out;
    }
    if (table == "3") {
        OptimizerOptions opts;
        opts.seed = seed;
        std::vector<ComplexMatrix> set = pauli_basis(1);
        set.push_back(z90_gate());
        ApproximationResult res = approximate(make_rotation(0.02, rotation_axis(0)), set, opts);
        const char *cols[] = {"chi00", "chi11", "chi22", "chi33"};
        for (int c = 0; c < 4; c++) {
            out.push_back({"3", "L3-0", cols[c], res.chi_diag[c]});
        }
        out.push_back({"3", "L3-0", "diamond", res.diamond_dist});
        out.push_back({"3", "L3-0", "weight_z90", res.mixture.probs[4]});
        return out;
    }
    if (table == "4") {
        OptimizerOptions opts;
        opts.seed = seed;
        const struct {
            const char *row;
            QuantumChannel ch;
        } rows[] = {
            {"L1", make_dephase_axis(0.01, rotation_axis(1))},
            {"L3-0", make_rotation(0.02, rotation_axis(0))},
            {"L3-1", make_rotation(0.02, rotation_axis(1))},
            {"L3-2", make_rotation(0.02, rotation_axis(2))},
        };
        for (const auto &r : rows) {
            out.push_back({"4", r.row, "twirl_dist",
                           diamond_distance(r.ch, pauli_twirl(r.ch)).value});
        }
        for (const auto &r : rows) {
            out.push_back({"4", r.row, "approx_dist",
                           approximate_pauli(r.ch, opts).diamond_dist});
        }
        return out;
    }
    if (table == "5") {
        OptimizerOptions opts;
        opts.seed = seed;
        opts.restarts = 6;
        ApproximationResult res =
            approximate_two_qubit_sparse(make_collective_xx(0.02), {"ii", "xx"}, opts);
        out.push_back({"5", "L2q", "chi00", res.chi_diag[0]});
        out.push_back({"5", "L2q", "chixx", res.chi_diag[5]});
        out.push_back({"5", "L2q", "diamond", res.diamond_dist});
        return out;
    }
    throw ParseError("unknown table: " + table);
}

int cmd_reproduce_tables(const std::string &table, double tol, const std::string &out_path) {
    std::vector<std::string> tables;
    if (table == "all") {
        tables = {"1", "2", "3", "4", "5"};
    } else {
        tables = {table};
    }

    std::ostringstream os;
    os << "# table,row,column,computed,expected,deviation,status,provenance\n";
    bool all_pass = true;
    for (const auto &t : tables) {
        const std::vector<golden::Cell> *cells = nullptr;
        if (t == "1") cells = &golden::table1();
        else if (t == "2") cells = &golden::table2();
        else if (t == "3") cells = &golden::table3();
        else if (t == "4") cells = &golden::table4();
        else if (t == "5") cells = &golden::table5();
        else throw ParseError("unknown table: " + t);

        std::vector<ComputedCell> computed = compute_table(t, 1);
        for (const auto &cell : *cells) {
            double value = 0;
            bool found = false;
            for (const auto &c : computed) {
                if (c.row == cell.row && c.column == cell.column) {
                    value = c.computed;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw SolverFailure("internal: no computed value for table " + t + " row " +
                                    cell.row + " column " + cell.column);
            }
            double dev = std::abs(value - cell.value);
            bool pass = dev <= tol;
            all_pass = all_pass && pass;
            char line[512];
            std::snprintf(line, sizeof(line), "%s,%s,%s,%.17g,%.17g,%.3e,%s,%s\n",
                          t.c_str(), cell.row.c_str(), cell.column.c_str(), value, cell.value,
                          dev, pass ? "pass" : "FAIL", cell.provenance.c_str());
            os << line;
        }
    }

    std::cout << os.str();
    if (!out_path.empty()) {
        write_text_file(out_path, os.str());
    }
    return all_pass ? 0 : kExitTableMismatch;
}

int cmd_fig1_data(int j, const std::string &prefix, uint64_t seed, int restarts) {
    const double theta = 2.0 * std::asin(std::sqrt(0.1));
    const auto axis = rotation_axis(j);
    const QuantumChannel rot = make_rotation(theta, axis);

    OptimizerOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    const QuantumChannel pauli_ch = approximate_pauli(rot, opts).mixture.to_channel(1);
    const QuantumChannel dephase_ch = exact_dephasing_match(theta, axis).to_channel(1);
    const QuantumChannel twirl_ch = pauli_twirl(rot);

    const BlochAffineMap mp = kraus_to_bloch(pauli_ch);
    const BlochAffineMap md = kraus_to_bloch(dephase_ch);
    const BlochAffineMap mt = kraus_to_bloch(twirl_ch);

    auto image = [](const BlochAffineMap &m, double x, double z, double &ox, double &oz) {
        ox = m.m(0, 0) * x + m.m(0, 2) * z + m.t[0];
        oz = m.m(2, 0) * x + m.m(2, 2) * z + m.t[2];
    };

    std::ostringstream plane;
    plane << "# alpha,x,z,pauli_x,pauli_z,dephase_x,dephase_z,twirl_x,twirl_z\n";
    for (int i = 0; i < 360; i++) {
        double alpha = 2.0 * M_PI * i / 360.0;
        double x = std::sin(alpha), z = std::cos(alpha);
        double px, pz, dx, dz, tx, tz;
        image(mp, x, z, px, pz);
        image(md, x, z, dx, dz);
        image(mt, x, z, tx, tz);
        char line[320];
        std::snprintf(line, sizeof(line),
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      alpha, x, z, px, pz, dx, dz, tx, tz);
        plane << line;
    }

    std::ostringstream curves;
    curves << "# alpha,dist_pauli,dist_dephase,dist_twirl\n";
    for (int i = 0; i <= 180; i++) {
        double alpha = M_PI * i / 180.0;
        DensityMatrix rho = DensityMatrix::from_bloch({std::sin(alpha), 0.0, std::cos(alpha)});
        char line[160];
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", alpha,
                      io_distinguishability(pauli_ch, rho),
                      io_distinguishability(dephase_ch, rho),
                      io_distinguishability(twirl_ch, rho));
        curves << line;
    }

    std::string plane_path = prefix + "-j" + std::to_string(j) + "-plane.csv";
    std::string curves_path = prefix + "-j" + std::to_string(j) + "-curves.csv";
    write_text_file(plane_path, plane.str());
    write_text_file(curves_path, curves.str());
    std::printf("wrote %s\nwrote %s\n", plane_path.c_str(), curves_path.c_str());
    return 0;
}

int cmd_diamond(const std::string &path_a, const std::string &path_b) {
    ChannelDocument a = load_channel_file(path_a);
    ChannelDocument b = load_channel_file(path_b);
    DiamondResult res = diamond_distance(a.channel, b.channel);
    double lb = diamond_lower_bound(a.channel, b.channel, 16, 1);
    std::printf("diamond = %.6f\n", res.value);
    std::printf("duality_gap = %.3e\n", res.sdp.gap);
    std::printf("lower_bound = %.6f\n", lb);
    std::printf("lb_shortfall = %.3e\n", res.value - lb);
    return 0;
}

int cmd_honesty_check(
    const std::string &approx_path, const std::string &truth_path, size_t samples, uint64_t seed) {
    ChannelDocument approx = load_channel_file(approx_path);
    ChannelDocument truth = load_channel_file(truth_path);
    if (approx.channel.dim() != truth.channel.dim()) {
        throw DimensionMismatchError("honesty-check: channel dimensions differ");
    }

    HonestyCertificate cert = certify(kraus_to_bloch(approx.channel).m, truth.channel);
    HonestyReport rep = empirical_honesty_check(approx.channel, truth.channel, samples, seed);

    const char *mode = cert.mode == HonestyMode::unital           ? "unital"
                       : cert.mode == HonestyMode::non_unital     ? "non-unital"
                                                                  : "multi-qubit-conjectural";
    std::printf("certificate: mode = %s, min_eig = %.6e, pass = %s\n", mode,
                cert.min_eig_a_minus_b, cert.pass ? "yes" : "no");
    std::printf("empirical: max_violation = %.6e over %zu samples (seed %llu)\n",
                rep.max_violation, rep.n_samples, static_cast<unsigned long long>(rep.seed));
    bool dishonest = !cert.pass || rep.max_violation > 1e-8;
    if (dishonest && rep.max_violation > 1e-8 && rep.worst_state.rho.rows() == 2) {
        auto r = rep.worst_state.bloch_vector();
        std::printf("witness state bloch = (%.6f, %.6f, %.6f)\n", r[0], r[1], r[2]);
    }
    std::printf("verdict: %s\n", dishonest ? "dishonest" : "honest");
    return dishonest ? kExitDishonest : 0;
}

int cmd_twirl(const std::string &channel_path, const std::string &out_path, size_t samples) {
    ChannelDocument doc = load_channel_file(channel_path);
    QuantumChannel tw = pauli_twirl(doc.channel);
    ChiMatrix chi = kraus_to_chi(tw);
    std::printf("twirl chi diagonal:");
    for (size_t i = 0; i < chi.chi.rows(); i++) {
        std::printf(" %.6f", chi.chi(i, i).real());
    }
    std::printf("\n");
    if (samples > 0) {
        std::printf("group-average agreement: max deviation %.3e over %zu samples\n",
                    twirl_equivalence_check(doc.channel, samples, 1), samples);
    }
    if (!out_path.empty()) {
        std::string label = doc.label.empty() ? "twirl" : doc.label + "-twirl";
        write_text_file(out_path, channel_to_json(tw, label) + "\n");
        std::printf("wrote %s\n", out_path.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Honest Pauli and mixed-Clifford approximations of quantum noise channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // approximate
    auto *ap = app.add_subcommand("approximate", "Approximate a channel by an honest mixture");
    std::string ap_channel, ap_set = "pauli", ap_out;
    std::vector<std::string> ap_support;
    uint64_t ap_seed = 1;
    int ap_restarts = 16, ap_max_iters = 2000;
    ap->add_option("channel", ap_channel, "Channel file")->required();
    ap->add_option("--set", ap_set, "Mixing set: pauli, pauli+H, pauli+Z90, custom:<file>");
    ap->add_option("--support", ap_support,
                   "Two-qubit Pauli labels restricting the mixing set (e.g. ii xx)");
    ap->add_option("--seed", ap_seed, "Optimizer seed");
    ap->add_option("--restarts", ap_restarts, "Optimizer restarts");
    ap->add_option("--max-iters", ap_max_iters, "Outer iteration cap per restart");
    ap->add_option("--out", ap_out, "Write a JSON run report");

    // reproduce-tables
    auto *rt = app.add_subcommand("reproduce-tables", "Compare computed values to the golden tables");
    std::string rt_table = "all", rt_out;
    double rt_tol = 2e-3;
    rt->add_option("--table", rt_table, "Table to reproduce: 1, 2, 3, 4, 5, or all");
    rt->add_option("--tol", rt_tol, "Per-cell absolute tolerance");
    rt->add_option("--out", rt_out, "Also write the comparison to a file");

    // fig1-data
    auto *fd = app.add_subcommand("fig1-data", "Export Bloch-plane images and distinguishability curves");
    int fd_j = 0, fd_restarts = 8;
    std::string fd_prefix = "fig1";
    uint64_t fd_seed = 1;
    fd->add_option("--j", fd_j, "Rotation axis index (0, 1, or 2)")->required()
        ->check(CLI::Range(0, 2));
    fd->add_option("--out", fd_prefix, "Output file prefix");
    fd->add_option("--seed", fd_seed, "Optimizer seed");
    fd->add_option("--restarts", fd_restarts, "Optimizer restarts");

    // diamond
    auto *dm = app.add_subcommand("diamond", "Diamond distance between two channels");
    std::string dm_a, dm_b;
    dm->add_option("channel-a", dm_a, "First channel file")->required();
    dm->add_option("channel-b", dm_b, "Second channel file")->required();

    // honesty-check
    auto *hc = app.add_subcommand("honesty-check", "Check whether one channel honestly approximates another");
    std::string hc_approx, hc_truth;
    size_t hc_samples = 10000;
    uint64_t hc_seed = 1;
    hc->add_option("approximation", hc_approx, "Approximation channel file")->required();
    hc->add_option("truth", hc_truth, "True channel file")->required();
    hc->add_option("--samples", hc_samples, "Empirical sample count");
    hc->add_option("--seed", hc_seed, "Sampling seed");

    // twirl
    auto *tw = app.add_subcommand("twirl", "Pauli twirl of a channel");
    std::string tw_channel, tw_out;
    size_t tw_samples = 100;
    tw->add_option("channel", tw_channel, "Channel file")->required();
    tw->add_option("--out", tw_out, "Write the twirled channel as a channel file");
    tw->add_option("--samples", tw_samples, "Group-average agreement sample count (0 to skip)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (ap->parsed()) {
            return cmd_approximate(ap_channel, ap_set, ap_support, ap_seed, ap_restarts,
                                   ap_max_iters, ap_out);
        }
        if (rt->parsed()) {
            return cmd_reproduce_tables(rt_table, rt_tol, rt_out);
        }
        if (fd->parsed()) {
            return cmd_fig1_data(fd_j, fd_prefix, fd_seed, fd_restarts);
        }
        if (dm->parsed()) {
            return cmd_diamond(dm_a, dm_b);
        }
        if (hc->parsed()) {
            return cmd_honesty_check(hc_approx, hc_truth, hc_samples, hc_seed);
        }
        if (tw->parsed()) {
            return cmd_twirl(tw_channel, tw_out, tw_samples);
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InfeasibleError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const SolverFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
