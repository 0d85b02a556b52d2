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

#include <algorithm>
#include <fstream>
#include <locale>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace qaoatn {

namespace {

/// Whitespace-separated tokens of one line, parsed in the classic locale.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Advances to the next non-empty, non-comment line. Returns false at end of input.
    bool next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            tokens_.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) {
                tokens_.push_back(tok);
            }
            return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }
    const std::vector<std::string>& tokens() const { return tokens_; }

    void expect_count(std::size_t n) const {
        if (tokens_.size() != n) {
            fail("expected " + std::to_string(n) + " fields, got " + std::to_string(tokens_.size()));
        }
    }

    long integer(std::size_t i) const {
        const std::string& s = tokens_[i];
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) {
            fail("'" + s + "' is not an integer");
        }
        return value;
    }

    double real(std::size_t i) const {
        std::istringstream ss(tokens_[i]);
        ss.imbue(std::locale::classic());
        double value = 0.0;
        ss >> value;
        if (ss.fail() || !ss.eof()) {
            fail("'" + tokens_[i] + "' is not a number");
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_no_, message); }

private:
    std::istream& in_;
    int line_no_ = 0;
    std::vector<std::string> tokens_;
};

std::string format_real(double value) {
    std::ostringstream ss;
    ss.imbue(std::locale::classic());
    ss.precision(17);
    ss << value;
    return ss.str();
}

}  // namespace

ProblemGraph read_graph(std::istream& in) {
    LineReader r(in);
    if (!r.next()) {
        throw ParseError(0, "empty graph file");
    }
    r.expect_count(2);
    const long nodes = r.integer(0);
    const long edge_count = r.integer(1);
    if (nodes < 1 || edge_count < 0) {
        r.fail("node count must be >= 1 and edge count >= 0");
    }
    std::vector<ProblemGraph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    std::set<std::pair<long, long>> seen;
    for (long e = 0; e < edge_count; ++e) {
        if (!r.next()) {
            throw ParseError(r.line_no(), "expected " + std::to_string(edge_count) + " edges, found " +
                                              std::to_string(e));
        }
        r.expect_count(2);
        const long u = r.integer(0);
        const long v = r.integer(1);
        if (u < 0 || v < 0 || u >= nodes || v >= nodes) {
            r.fail("edge endpoint out of range 0.." + std::to_string(nodes - 1));
        }
        if (u == v) {
            r.fail("self-loop on node " + std::to_string(u));
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (r.next()) {
        r.fail("unexpected content after the last edge");
    }
    return ProblemGraph(static_cast<int>(nodes), std::move(edges));
}

void write_graph(std::ostream& out, const ProblemGraph& graph) {
    out << graph.node_count() << ' ' << graph.edge_count() << '\n';
    for (const auto& [u, v] : graph.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Circuit read_circuit(std::istream& in) {
    LineReader r(in);
    if (!r.next()) {
        throw ParseError(0, "empty circuit file");
    }
    if (r.tokens()[0] != "qubits") {
        r.fail("circuit must start with 'qubits <N>'");
    }
    r.expect_count(2);
    const long n = r.integer(1);
    if (n < 1) {
        r.fail("qubit count must be >= 1");
    }
    std::optional<Circuit> circuit;
    circuit.emplace(static_cast<int>(n));
    bool seen_gate = false;
    while (r.next()) {
        const std::string& op = r.tokens()[0];
        try {
            if (op == "phase") {
                if (seen_gate) {
                    r.fail("'phase' must precede the gates");
                }
                r.expect_count(3);
                const Circuit fresh(static_cast<int>(n), Complex{r.real(1), r.real(2)});
                circuit.emplace(fresh);
                continue;
            }
            seen_gate = true;
            if (op == "H") {
                r.expect_count(2);
                circuit->append(Gate::h(static_cast<int>(r.integer(1))));
            } else if (op == "ZPOW" || op == "XPOW") {
                r.expect_count(3);
                const int q = static_cast<int>(r.integer(1));
                const double t = r.real(2);
                circuit->append(op == "ZPOW" ? Gate::zpow(q, t) : Gate::xpow(q, t));
            } else if (op == "CNOT") {
                r.expect_count(3);
                circuit->append(Gate::cnot(static_cast<int>(r.integer(1)), static_cast<int>(r.integer(2))));
            } else if (op == "ZZ") {
                r.expect_count(4);
                circuit->append(
                    Gate::zz(static_cast<int>(r.integer(1)), static_cast<int>(r.integer(2)), r.real(3)));
            } else {
                r.fail("unknown gate '" + op + "'");
            }
        } catch (const std::invalid_argument& err) {
            r.fail(err.what());
        }
    }
    return std::move(*circuit);
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
    out << "qubits " << circuit.qubit_count() << '\n';
    if (circuit.phase() != Complex{1.0, 0.0}) {
        out << "phase " << format_real(circuit.phase().real()) << ' ' << format_real(circuit.phase().imag()) << '\n';
    }
    for (const Gate& g : circuit.gates()) {
        out << gate_name(g.kind) << ' ' << g.qubits[0];
        if (g.arity() == 2) {
            out << ' ' << g.qubits[1];
        }
        if (g.kind != GateKind::H && g.kind != GateKind::CNOT) {
            out << ' ' << format_real(g.param);
        }
        out << '\n';
    }
}

ContractionOrder read_order(std::istream& in) {
    LineReader r(in);
    ContractionOrder order;
    while (r.next()) {
        r.expect_count(1);
        order.sequence.push_back(static_cast<int>(r.integer(0)));
    }
    return order;
}

void write_order(std::ostream& out, const ContractionOrder& order) {
    for (const int v : order.sequence) {
        out << v << '\n';
    }
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return in;
}

}  // namespace

ProblemGraph load_graph(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

Circuit load_circuit(const std::string& path) {
    auto in = open_input(path);
    return read_circuit(in);
}

}  // namespace qaoatn
