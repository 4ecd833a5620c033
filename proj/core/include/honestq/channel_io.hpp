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

/// JSON channel documents. Two shapes are accepted:
///   {"n_qubits": 1, "kraus": [[[[re, im], ...], ...], ...], "label": "..."}
///   {"preset": "depolarizing", "params": {"p": 0.01}, "axis": [0,0,1]}
/// Matrix entries are [re, im] pairs; rows are listed outermost.

#ifndef HONESTQ_CHANNEL_IO_HPP
#define HONESTQ_CHANNEL_IO_HPP

#include <string>

#include "honestq/channel.hpp"

namespace honestq {

struct ChannelDocument {
    QuantumChannel channel;
    std::string label;
    /// Stable content digest of the parsed Kraus data, for report headers.
    std::string digest;
};

/// Parse a channel document from JSON text. Throws ParseError with a message
/// naming the offending field; the parsed channel always passes CPTP
/// validation.
ChannelDocument parse_channel_document(const std::string &json_text);

/// Read and parse a channel file. Throws ParseError on I/O failure too.
ChannelDocument load_channel_file(const std::string &path);

/// Serialize a channel to the kraus document shape with full precision.
std::string channel_to_json(const QuantumChannel &ch, const std::string &label);

}  // namespace honestq

#endif
