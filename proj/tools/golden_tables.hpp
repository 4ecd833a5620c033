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

/// Read-only golden dataset for the published tables, with per-cell
/// provenance strings so every comparison target is auditable.

#ifndef HONESTQ_TOOLS_GOLDEN_TABLES_HPP
#define HONESTQ_TOOLS_GOLDEN_TABLES_HPP

#include <string>
#include <vector>

namespace honestq::golden {

struct Cell {
    std::string table;
    std::string row;
    std::string column;
    double value;
    std::string provenance;
};

/// Table 1: Pauli approximations of the seven preset channels
/// (chi00..chi33 and diamond distance per row).
const std::vector<Cell> &table1();

/// Table 2: chi00 of the input channels themselves.
const std::vector<Cell> &table2();

/// Table 3: the Z90-augmented approximation of the z-axis rotation.
const std::vector<Cell> &table3();

/// Table 4: twirl distances vs Pauli-approximation distances. The three
/// rotation rows carry a corrected value; see each cell's provenance.
const std::vector<Cell> &table4();

/// Table 5: sparse two-qubit approximation of the collective XX rotation.
const std::vector<Cell> &table5();

}  // namespace honestq::golden

#endif
