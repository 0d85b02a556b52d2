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

#include "qaoatn/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qaoatn {

namespace {

constexpr double kUnitPhaseTolerance = 1e-12;

Complex expi(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

ProblemGraph::ProblemGraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ < 1) {
        throw std::invalid_argument("graph must have at least one node");
    }
    std::set<Edge> seen;
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(u));
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
}

std::vector<int> ProblemGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(node_count_), 0);
    for (const auto& [u, v] : edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

std::size_t QaoaParams::depth() const {
    if (gammas.size() != betas.size()) {
        throw std::invalid_argument("gammas and betas must have the same length (got " +
                                    std::to_string(gammas.size()) + " and " + std::to_string(betas.size()) + ")");
    }
    return gammas.size();
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::ZPow: return "ZPOW";
        case GateKind::XPow: return "XPOW";
        case GateKind::CNOT: return "CNOT";
        case GateKind::ZZ: return "ZZ";
    }
    return "?";
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::ZZ: return 2;
        default: return 1;
    }
}

GateMatrix gate_matrix(const Gate& gate) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (gate.kind) {
        case GateKind::H:
            return {2, {s, s, s, -s}};
        case GateKind::ZPow:
            return {2, {1.0, 0.0, 0.0, expi(-gate.param)}};
        case GateKind::XPow: {
            // H diag(1, w) H = 1/2 [[1 + w, 1 - w], [1 - w, 1 + w]]
            const Complex w = expi(-gate.param);
            const Complex a = 0.5 * (1.0 + w);
            const Complex b = 0.5 * (1.0 - w);
            return {2, {a, b, b, a}};
        }
        case GateKind::CNOT:
            return {4, {1, 0, 0, 0,
                        0, 1, 0, 0,
                        0, 0, 0, 1,
                        0, 0, 1, 0}};
        case GateKind::ZZ: {
            const Complex rho = expi(gate.param);
            const Complex rho_bar = std::conj(rho);
            return {4, {rho, 0, 0, 0,
                        0, rho_bar, 0, 0,
                        0, 0, rho_bar, 0,
                        0, 0, 0, rho}};
        }
    }
    throw std::logic_error("unknown gate kind");
}

bool is_diagonal(const Gate& gate) {
    return gate.kind == GateKind::ZPow || gate.kind == GateKind::ZZ;
}

Circuit::Circuit(int qubit_count, Complex phase) : qubit_count_(qubit_count), phase_(phase) {
    if (qubit_count_ < 1) {
        throw std::invalid_argument("circuit must have at least one qubit");
    }
    if (std::abs(std::abs(phase_) - 1.0) > kUnitPhaseTolerance) {
        throw std::invalid_argument("circuit phase must have unit modulus");
    }
}

void Circuit::append(const Gate& gate) {
    const int arity = gate.arity();
    for (int k = 0; k < arity; ++k) {
        const int q = gate.qubits[static_cast<std::size_t>(k)];
        if (q < 0 || q >= qubit_count_) {
            throw std::invalid_argument(std::string(gate_name(gate.kind)) + " acts on qubit " + std::to_string(q) +
                                        " outside 0.." + std::to_string(qubit_count_ - 1));
        }
    }
    if (arity == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) + " needs two distinct qubits");
    }
    Gate stored = gate;
    if (arity == 1) {
        stored.qubits[1] = -1;
    }
    gates_.push_back(stored);
}

void Circuit::multiply_phase(Complex factor) { phase_ *= factor; }

std::size_t Circuit::one_qubit_gate_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.arity() == 1; }));
}

std::size_t Circuit::two_qubit_gate_count() const { return gates_.size() - one_qubit_gate_count(); }

Circuit build_qaoa_maxcut_circuit(const ProblemGraph& graph, const QaoaParams& params, bool fused) {
    const std::size_t p = params.depth();
    const int n = graph.node_count();
    Circuit circuit(n);
    for (int q = 0; q < n; ++q) {
        circuit.append(Gate::h(q));
    }
    for (std::size_t round = 0; round < p; ++round) {
        const double gamma = params.gammas[round];
        const double beta = params.betas[round];
        for (const auto& [i, j] : graph.edges()) {
            if (fused) {
                circuit.append(Gate::zz(i, j, gamma));
                circuit.multiply_phase(expi(-gamma));
            } else {
                circuit.append(Gate::cnot(i, j));
                circuit.append(Gate::zpow(j, 2.0 * gamma));
                circuit.append(Gate::cnot(i, j));
            }
        }
        for (int q = 0; q < n; ++q) {
            if (fused) {
                circuit.append(Gate::xpow(q, 2.0 * beta));
            } else {
                circuit.append(Gate::h(q));
                circuit.append(Gate::zpow(q, 2.0 * beta));
                circuit.append(Gate::h(q));
            }
        }
    }
    return circuit;
}

Circuit fuse_zz(const Circuit& circuit) {
    const auto& gates = circuit.gates();
    const std::size_t count = gates.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    // next_on[i][k]: index of the next gate after i touching gates[i].qubits[k].
    std::vector<std::array<std::size_t, 2>> next_on(count, {kNone, kNone});
    std::vector<std::size_t> last(static_cast<std::size_t>(circuit.qubit_count()), kNone);
    for (std::size_t i = count; i-- > 0;) {
        const Gate& g = gates[i];
        for (int k = 0; k < g.arity(); ++k) {
            const auto q = static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(k)]);
            next_on[i][static_cast<std::size_t>(k)] = last[q];
        }
        for (int k = 0; k < g.arity(); ++k) {
            last[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(k)])] = i;
        }
    }

    Circuit out(circuit.qubit_count(), circuit.phase());
    std::vector<bool> consumed(count, false);
    for (std::size_t i = 0; i < count; ++i) {
        if (consumed[i]) {
            continue;
        }
        const Gate& g = gates[i];
        if (g.kind == GateKind::CNOT) {
            const int control = g.qubits[0];
            const int target = g.qubits[1];
            const std::size_t j = next_on[i][1];
            const std::size_t k = next_on[i][0];
            if (j != kNone && k != kNone && j < k && gates[j].kind == GateKind::ZPow &&
                gates[j].qubits[0] == target && next_on[j][0] == k && gates[k] == g) {
                const double gamma = gates[j].param / 2.0;
                out.append(Gate::zz(control, target, gamma));
                out.multiply_phase(expi(-gamma));
                consumed[j] = consumed[k] = true;
                continue;
            }
        } else if (g.kind == GateKind::H) {
            const std::size_t j = next_on[i][0];
            if (j != kNone && gates[j].kind == GateKind::ZPow) {
                const std::size_t k = next_on[j][0];
                if (k != kNone && gates[k].kind == GateKind::H) {
                    out.append(Gate::xpow(g.qubits[0], gates[j].param));
                    consumed[j] = consumed[k] = true;
                    continue;
                }
            }
        }
        out.append(g);
    }
    return out;
}

}  // namespace qaoatn
