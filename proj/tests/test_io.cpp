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

#include "qaoatn/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qaoatn/bench.hpp"

using namespace qaoatn;

namespace {

int graph_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_graph(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

int circuit_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_circuit(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(GraphFile, ReadsCommentsAndBlankLines) {
    std::istringstream in("# triangle\n3 3\n0 1\n\n1 2\n2 0\n");
    const ProblemGraph g = read_graph(in);
    EXPECT_EQ(g.node_count(), 3);
    EXPECT_EQ(g.edge_count(), 3U);
}

TEST(GraphFile, ErrorsCarryLineNumbers) {
    EXPECT_EQ(graph_error_line("3 2\n0 1\n1 1\n"), 3);        // self-loop
    EXPECT_EQ(graph_error_line("3 2\n0 1\n1 0\n"), 3);        // duplicate
    EXPECT_EQ(graph_error_line("3 1\n0 7\n"), 2);             // out of range
    EXPECT_EQ(graph_error_line("3 1\n0 x\n"), 2);             // not a number
    EXPECT_EQ(graph_error_line("3 1\n0 1 2\n"), 2);           // arity
    EXPECT_EQ(graph_error_line("3\n"), 1);                    // header
    EXPECT_EQ(graph_error_line("3 2\n0 1\n1 2\n0 2\n"), 4);   // trailing edge
    EXPECT_EQ(graph_error_line("0 0\n"), 1);
    EXPECT_EQ(graph_error_line(""), 0);
    EXPECT_GT(graph_error_line("3 3\n0 1\n"), 0);             // truncated
}

TEST(GraphFile, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ProblemGraph g = random_regular_graph(20, 3, seed);
        std::stringstream ss;
        write_graph(ss, g);
        const ProblemGraph back = read_graph(ss);
        EXPECT_EQ(back.node_count(), g.node_count());
        EXPECT_EQ(back.edges(), g.edges());
    }
}

TEST(CircuitFile, ErrorsCarryLineNumbers) {
    EXPECT_EQ(circuit_error_line("qubits 2\nH 0\nFOO 1\n"), 3);
    EXPECT_EQ(circuit_error_line("qubits 2\nH 2\n"), 2);
    EXPECT_EQ(circuit_error_line("qubits 2\nCNOT 0 0\n"), 2);
    EXPECT_EQ(circuit_error_line("qubits 2\nZPOW 0\n"), 2);
    EXPECT_EQ(circuit_error_line("qubits 2\nZZ 0 1 abc\n"), 2);
    EXPECT_EQ(circuit_error_line("qubits 2\nH 0\nphase 1 0\n"), 3);
    EXPECT_EQ(circuit_error_line("qubits 2\nphase 2 0\n"), 2);
    EXPECT_EQ(circuit_error_line("H 0\n"), 1);
    EXPECT_EQ(circuit_error_line("qubits 0\n"), 1);
}

TEST(CircuitFile, RoundTripIsExact) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Circuit c = oracle::random_fusable_circuit(n, 20, rng);
        if (trial % 2 == 0) {
            c = fuse_zz(c);
        }
        std::stringstream ss;
        write_circuit(ss, c);
        const Circuit back = read_circuit(ss);
        EXPECT_EQ(back.qubit_count(), c.qubit_count());
        EXPECT_EQ(back.gates(), c.gates());
        EXPECT_EQ(back.phase(), c.phase());
    }
}

TEST(CircuitFile, AcceptsAllGateKinds) {
    std::istringstream in("qubits 3\nphase 0 1\n# comment\nH 0\nZPOW 1 0.5\nXPOW 2 -1.5\nCNOT 0 2\nZZ 1 2 0.25\n");
    const Circuit c = read_circuit(in);
    ASSERT_EQ(c.gates().size(), 5U);
    EXPECT_EQ(c.phase(), Complex(0.0, 1.0));
    EXPECT_EQ(c.gates()[4], Gate::zz(1, 2, 0.25));
}

TEST(OrderFile, RoundTrip) {
    const ContractionOrder order{{4, 0, 3, 1, 2}};
    std::stringstream ss;
    write_order(ss, order);
    EXPECT_EQ(read_order(ss), order);
    std::istringstream bad("1\n2 3\n");
    EXPECT_THROW(read_order(bad), ParseError);
}

TEST(Files, MissingFileIsAParseError) {
    EXPECT_THROW(load_graph("/nonexistent/graph.txt"), ParseError);
    EXPECT_THROW(load_circuit("/nonexistent/circuit.txt"), ParseError);
}
