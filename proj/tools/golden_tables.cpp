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

#include "golden_tables.hpp"

namespace honestq::golden {

namespace {

std::vector<Cell> make_table1() {
    std::vector<Cell> cells;
    struct Row {
        const char *name;
        double chi[4];
        double diamond;
    };
    const Row rows[] = {
        {"L1", {0.9860, 0.0020, 0.0040, 0.0080}, 0.0152},
        {"L2", {0.9700, 0.0100, 0.0100, 0.0100}, 0.0},
        {"L3-0", {0.9900, 0.0, 0.0, 0.0100}, 0.0281},
        {"L3-1", {0.9860, 0.0022, 0.0040, 0.0078}, 0.0359},
        {"L3-2", {0.9850, 0.0050, 0.0050, 0.0050}, 0.0381},
        {"L3-3", {0.9860, 0.0078, 0.0040, 0.0022}, 0.0359},
        {"L3-4", {0.9900, 0.0100, 0.0, 0.0}, 0.0281},
    };
    const char *cols[] = {"chi00", "chi11", "chi22", "chi33"};
    for (const auto &r : rows) {
        for (int c = 0; c < 4; c++) {
            cells.push_back({"1", r.name, cols[c], r.chi[c],
                             std::string("published Table I, row ") + r.name});
        }
        cells.push_back({"1", r.name, "diamond", r.diamond,
                         std::string("published Table I, row ") + r.name});
    }
    return cells;
}

std::vector<Cell> make_table2() {
    return {
        {"2", "L1", "chi00", 0.9900, "published Table II; closed form 1 - p"},
        {"2", "L2", "chi00", 0.9700, "published Table II; closed form 1 - 3p"},
        {"2", "L3-j", "chi00", 0.9999, "published Table II; closed form cos^2(theta/2)"},
    };
}

std::vector<Cell> make_table3() {
    return {
        {"3", "L3-0", "chi00", 0.9929, "published Table III; 1 - q/2 with q = sqrt(2) sin(0.01)"},
        {"3", "L3-0", "chi11", 0.0, "published Table III"},
        {"3", "L3-0", "chi22", 0.0, "published Table III"},
        {"3", "L3-0", "chi33", 0.0071, "published Table III; q/2 with q = sqrt(2) sin(0.01)"},
        {"3", "L3-0", "diamond", 0.0151, "published Table III"},
        {"3", "L3-0", "weight_z90", 0.014142,
         "derived: honesty boundary gives weight sqrt(2) sin(0.01) on Z_{pi/2}"},
    };
}

std::vector<Cell> make_table4() {
    // The three rotation rows of the published table print 0.0020 for the
    // twirl distance, but that is below the single-state lower bound: the
    // difference map is i cos(theta/2) sin(theta/2) (rho Z - Z rho) up to a
    // basis rotation, whose trace norm on an equatorial input is already
    // sin(theta) = 0.0200. The printed value is a digit transposition; the
    // corrected value is stored here and the discrepancy is flagged in the
    // comparison output.
    const char *corrected =
        "published Table IV prints 0.0020; corrected to sin(0.02) = 0.0200 "
        "(digit transposition, value below the analytic lower bound)";
    return {
        {"4", "L1", "twirl_dist", 0.0071,
         "published Table IV; closed form 2 p sin(pi/8) cos(pi/8) = p sin(pi/4)"},
        {"4", "L3-0", "twirl_dist", 0.0200, corrected},
        {"4", "L3-1", "twirl_dist", 0.0200, corrected},
        {"4", "L3-2", "twirl_dist", 0.0200, corrected},
        {"4", "L1", "approx_dist", 0.0152, "published Table IV, equals Table I row L1"},
        {"4", "L3-0", "approx_dist", 0.0281, "published Table IV, equals Table I row L3-0"},
        {"4", "L3-1", "approx_dist", 0.0359, "published Table IV, equals Table I row L3-1"},
        {"4", "L3-2", "approx_dist", 0.0381, "published Table IV, equals Table I row L3-2"},
    };
}

std::vector<Cell> make_table5() {
    return {
        {"5", "L2q", "chi00", 0.9900, "published Table V"},
        {"5", "L2q", "chixx", 0.0100, "published Table V"},
        {"5", "L2q", "diamond", 0.0281,
         "published Table V; matches the single-qubit x-rotation row of Table I"},
    };
}

}  // namespace

const std::vector<Cell> &table1() {
    static const std::vector<Cell> cells = make_table1();
    return cells;
}

const std::vector<Cell> &table2() {
    static const std::vector<Cell> cells = make_table2();
    return cells;
}

const std::vector<Cell> &table3() {
    static const std::vector<Cell> cells = make_table3();
    return cells;
}

const std::vector<Cell> &table4() {
    static const std::vector<Cell> cells = make_table4();
    return cells;
}

const std::vector<Cell> &table5() {
    static const std::vector<Cell> cells = make_table5();
    return cells;
}

}  // namespace honestq::golden
