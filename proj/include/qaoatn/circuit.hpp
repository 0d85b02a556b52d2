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

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qaoatn {

using Complex = std::complex<double>;

/// Simple undirected graph defining a MaxCut instance. Vertices are 0..node_count-1.
class ProblemGraph {
public:
    using Edge = std::pair<int, int>;

    ProblemGraph() = default;
    /// Throws std::invalid_argument on self-loops, duplicate edges or out-of-range endpoints.
    ProblemGraph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::vector<int> degrees() const;

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
};

struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    /// Throws std::invalid_argument when the vectors differ in length.
    std::size_t depth() const;
};

enum class GateKind { H, ZPow, XPow, CNOT, ZZ };

const char* gate_name(GateKind kind);
int gate_arity(GateKind kind);

/// One gate application. For CNOT qubits[0] is the control.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<int, 2> qubits{0, -1};
    double param = 0.0;

    static Gate h(int q) { return {GateKind::H, {q, -1}, 0.0}; }
    static Gate zpow(int q, double t) { return {GateKind::ZPow, {q, -1}, t}; }
    static Gate xpow(int q, double t) { return {GateKind::XPow, {q, -1}, t}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, 0.0}; }
    static Gate zz(int a, int b, double gamma) { return {GateKind::ZZ, {a, b}, gamma}; }

    int arity() const { return gate_arity(kind); }
    bool acts_on(int q) const { return qubits[0] == q || (arity() == 2 && qubits[1] == q); }

    bool operator==(const Gate&) const = default;
};

/// Dense row-major square matrix over the computational basis of 1 or 2 qubits.
/// For 2-qubit gates the first qubit is the most significant bit of the row index.
struct GateMatrix {
    int dim = 0;
    std::vector<Complex> data;

    Complex operator()(int row, int col) const { return data[static_cast<std::size_t>(row * dim + col)]; }
};

GateMatrix gate_matrix(const Gate& gate);

/// Structural check: ZPow and ZZ are diagonal, everything else is not.
bool is_diagonal(const Gate& gate);

class Circuit {
public:
    explicit Circuit(int qubit_count, Complex phase = {1.0, 0.0});

    int qubit_count() const { return qubit_count_; }
    const std::vector<Gate>& gates() const { return gates_; }
    Complex phase() const { return phase_; }

    /// Validates the gate against the qubit count before appending.
    void append(const Gate& gate);
    void multiply_phase(Complex factor);

    std::size_t one_qubit_gate_count() const;
    std::size_t two_qubit_gate_count() const;

private:
    int qubit_count_;
    std::vector<Gate> gates_;
    Complex phase_;
};

/// Layer of H gates followed by p rounds of cost and mixer layers. Unfused rounds use the
/// CNOT-ZPow-CNOT / H-ZPow-H decomposition; fused rounds use ZZ / XPow and fold the scalar
/// e^{-i gamma} per edge into the circuit phase.
Circuit build_qaoa_maxcut_circuit(const ProblemGraph& graph, const QaoaParams& params, bool fused);

/// Rewrites CNOT(c,t) ZPow(2g on t) CNOT(c,t) into ZZ(g) and H ZPow(2b) H into XPow(2b).
/// The resulting circuit has exactly the same unitary, phase included.
Circuit fuse_zz(const Circuit& circuit);

}  // namespace qaoatn
