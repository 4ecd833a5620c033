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

#include "honestq/channel_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "honestq/errors.hpp"
#include "honestq/presets.hpp"

namespace honestq {

namespace {

using nlohmann::json;

cplx parse_entry(const json &e, const std::string &where) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError(where + ": matrix entries must be [re, im] number pairs");
    }
    return cplx(e[0].get<double>(), e[1].get<double>());
}

ComplexMatrix parse_matrix(const json &m, const std::string &where) {
    if (!m.is_array() || m.empty()) {
        throw ParseError(where + ": expected a nonempty list of rows");
    }
    size_t rows = m.size();
    size_t cols = m[0].is_array() ? m[0].size() : 0;
    if (cols == 0) {
        throw ParseError(where + ": rows must be nonempty lists");
    }
    ComplexMatrix out(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        if (!m[r].is_array() || m[r].size() != cols) {
            throw ParseError(where + ": ragged matrix at row " + std::to_string(r));
        }
        for (size_t c = 0; c < cols; c++) {
            out(r, c) = parse_entry(m[r][c], where);
        }
    }
    return out;
}

/// FNV-1a over the little-endian bytes of each entry, hex encoded.
std::string digest_channel(const QuantumChannel &ch) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](double v) {
        uint64_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        for (int i = 0; i < 8; i++) {
            h ^= (bits >> (8 * i)) & 0xffULL;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<double>(ch.n_qubits));
    for (const auto &k : ch.kraus) {
        for (size_t r = 0; r < k.rows(); r++) {
            for (size_t c = 0; c < k.cols(); c++) {
                mix(k(r, c).real());
                mix(k(r, c).imag());
            }
        }
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

PresetSpec parse_preset(const json &doc) {
    PresetSpec spec;
    spec.name = doc.at("preset").get<std::string>();
    if (doc.contains("params")) {
        const json &params = doc["params"];
        if (!params.is_object()) {
            throw ParseError("params: expected an object of named scalars");
        }
        for (auto it = params.begin(); it != params.end(); ++it) {
            if (!it.value().is_number()) {
                throw ParseError("params." + it.key() + ": expected a number");
            }
            spec.params[it.key()] = it.value().get<double>();
        }
    }
    if (doc.contains("axis")) {
        const json &axis = doc["axis"];
        if (!axis.is_array() || axis.size() != 3) {
            throw ParseError("axis: expected a 3-vector");
        }
        for (size_t i = 0; i < 3; i++) {
            if (!axis[i].is_number()) {
                throw ParseError("axis: expected numeric components");
            }
            spec.axis[i] = axis[i].get<double>();
        }
        spec.has_axis = true;
    }
    return spec;
}

}  // namespace

ChannelDocument parse_channel_document(const std::string &json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("channel document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("channel document: expected a JSON object");
    }

    bool has_kraus = doc.contains("kraus");
    bool has_preset = doc.contains("preset");
    if (has_kraus == has_preset) {
        throw ParseError("channel document: exactly one of kraus/preset must be present");
    }

    ChannelDocument out;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw ParseError("label: expected a string");
        }
        out.label = doc["label"].get<std::string>();
    }

    try {
        if (has_kraus) {
            if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
                throw ParseError("n_qubits: required integer field for kraus documents");
            }
            int n = doc["n_qubits"].get<int>();
            if (n < 1 || n > 4) {
                throw ParseError("n_qubits: supported range is 1..4");
            }
            const json &kraus = doc["kraus"];
            if (!kraus.is_array() || kraus.empty()) {
                throw ParseError("kraus: expected a nonempty list of matrices");
            }
            std::vector<ComplexMatrix> ops;
            for (size_t i = 0; i < kraus.size(); i++) {
                ops.push_back(parse_matrix(kraus[i], "kraus[" + std::to_string(i) + "]"));
            }
            out.channel = QuantumChannel::from_kraus(n, std::move(ops));
        } else {
            out.channel = make_channel(parse_preset(doc));
        }
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(std::string("channel document: ") + e.what());
    }

    CptpReport report = validate_cptp(out.channel);
    if (!report.pass) {
        throw ParseError(
            "channel document: not CPTP (tp defect " + std::to_string(report.tp_defect) +
            ", min Choi eigenvalue " + std::to_string(report.choi_min_eig) + ")");
    }
    out.digest = digest_channel(out.channel);
    return out;
}

ChannelDocument load_channel_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open channel file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_channel_document(buf.str());
}

std::string channel_to_json(const QuantumChannel &ch, const std::string &label) {
    json doc;
    doc["n_qubits"] = ch.n_qubits;
    if (!label.empty()) {
        doc["label"] = label;
    }
    json kraus = json::array();
    for (const auto &k : ch.kraus) {
        json mat = json::array();
        for (size_t r = 0; r < k.rows(); r++) {
            json row = json::array();
            for (size_t c = 0; c < k.cols(); c++) {
                row.push_back(json::array({k(r, c).real(), k(r, c).imag()}));
            }
            mat.push_back(row);
        }
        kraus.push_back(mat);
    }
    doc["kraus"] = kraus;
    return doc.dump(2);
}

}  // namespace honestq
