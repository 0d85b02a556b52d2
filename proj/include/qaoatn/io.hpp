// Copyright 2026 The qaoatn Authors
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

#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qaoatn/circuit.hpp"
#include "qaoatn/ordering.hpp"

namespace qaoatn {

/// Malformed input. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Graph text format: "<node_count> <edge_count>" then one "u v" pair per line.
ProblemGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const ProblemGraph& graph);

// Circuit text format: "qubits <N>", optional "phase <re> <im>", then one gate per line:
// "H q", "ZPOW q t", "XPOW q t", "CNOT c t", "ZZ q1 q2 gamma". Blank lines and '#'
// comments are ignored. Angles are written with 17 significant digits so they round-trip.
Circuit read_circuit(std::istream& in);
void write_circuit(std::ostream& out, const Circuit& circuit);

// Order file format: one vertex id per line.
ContractionOrder read_order(std::istream& in);
void write_order(std::ostream& out, const ContractionOrder& order);

ProblemGraph load_graph(const std::string& path);
Circuit load_circuit(const std::string& path);

}  // namespace qaoatn
