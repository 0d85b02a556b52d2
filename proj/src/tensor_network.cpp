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

#include "qaoatn/tensor_network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qaoatn {

Tensor Tensor::sliced(Variable variable, int bit) const {
    const auto it = std::find(variables.begin(), variables.end(), variable);
    if (it == variables.end()) {
        return *this;
    }
    const std::size_t pos = static_cast<std::size_t>(it - variables.begin());
    const std::size_t rank_before = variables.size();
    // Bit of `variable` in the flat index; the first variable is the most significant.
    const std::size_t shift = rank_before - 1 - pos;
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;

    Tensor out;
    out.id = id;
    out.variables = variables;
    out.variables.erase(out.variables.begin() + static_cast<std::ptrdiff_t>(pos));
    out.data.resize(std::size_t{1} << (rank_before - 1));
    for (std::size_t idx = 0; idx < out.data.size(); ++idx) {
        const std::size_t high = (idx & ~low_mask) << 1;
        const std::size_t src = high | (static_cast<std::size_t>(bit) << shift) | (idx & low_mask);
        out.data[idx] = data[src];
    }
    return out;
}

void TensorNetwork::validate() const {
    for (const Tensor& t : tensors) {
        if (t.data.size() != (std::size_t{1} << t.rank())) {
            throw std::invalid_argument("tensor " + std::to_string(t.id) + " has " + std::to_string(t.data.size()) +
                                        " entries for rank " + std::to_string(t.rank()));
        }
        for (std::size_t a = 0; a < t.variables.size(); ++a) {
            const Variable v = t.variables[a];
            if (v < 0 || v >= variable_count) {
                throw std::invalid_argument("tensor " + std::to_string(t.id) + " references unknown variable " +
                                            std::to_string(v));
            }
            for (std::size_t b = a + 1; b < t.variables.size(); ++b) {
                if (t.variables[b] == v) {
                    throw std::invalid_argument("tensor " + std::to_string(t.id) + " repeats variable " +
                                                std::to_string(v));
                }
            }
        }
    }
    for (const auto& [v, bit] : fixed) {
        if (v < 0 || v >= variable_count || (bit != 0 && bit != 1)) {
            throw std::invalid_argument("invalid fixed variable " + std::to_string(v));
        }
    }
}

std::vector<Variable> TensorNetwork::free_variables() const {
    std::vector<Variable> out;
    out.reserve(static_cast<std::size_t>(variable_count));
    for (Variable v = 0; v < variable_count; ++v) {
        if (!fixed.contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

TensorNetwork TensorNetwork::sliced() const {
    TensorNetwork out;
    out.variable_count = variable_count;
    out.fixed = fixed;
    out.tensors.reserve(tensors.size());
    for (const Tensor& t : tensors) {
        Tensor s = t;
        for (const Variable v : t.variables) {
            if (const auto it = fixed.find(v); it != fixed.end()) {
                s = s.sliced(v, it->second);
            }
        }
        out.tensors.push_back(std::move(s));
    }
    return out;
}

TensorNetwork circuit_to_network(const Circuit& circuit, NetworkMode mode, std::string_view output_bits) {
    const int n = circuit.qubit_count();
    if (output_bits.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("output bitstring has length " + std::to_string(output_bits.size()) +
                                    ", circuit has " + std::to_string(n) + " qubits");
    }
    for (const char c : output_bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("output bitstring may only contain '0' and '1'");
        }
    }

    TensorNetwork net;
    int next_id = 0;
    auto fresh = [&net] { return net.variable_count++; };
    auto add = [&](std::vector<Variable> vars, std::vector<Complex> data) {
        net.tensors.push_back({next_id++, std::move(vars), std::move(data)});
    };

    std::vector<Variable> wire(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        wire[static_cast<std::size_t>(q)] = fresh();
        add({wire[static_cast<std::size_t>(q)]}, {1.0, 0.0});
    }

    for (const Gate& gate : circuit.gates()) {
        const GateMatrix m = gate_matrix(gate);
        const auto a = static_cast<std::size_t>(gate.qubits[0]);
        if (mode == NetworkMode::Diagonal && is_diagonal(gate)) {
            if (gate.arity() == 1) {
                add({wire[a]}, {m(0, 0), m(1, 1)});
            } else {
                const auto b = static_cast<std::size_t>(gate.qubits[1]);
                add({wire[a], wire[b]}, {m(0, 0), m(1, 1), m(2, 2), m(3, 3)});
            }
            continue;
        }
        if (gate.arity() == 1) {
            const Variable out = fresh();
            add({out, wire[a]}, m.data);
            wire[a] = out;
        } else {
            const auto b = static_cast<std::size_t>(gate.qubits[1]);
            const Variable out_a = fresh();
            const Variable out_b = fresh();
            add({out_a, out_b, wire[a], wire[b]}, m.data);
            wire[a] = out_a;
            wire[b] = out_b;
        }
    }

    add({}, {circuit.phase()});
    for (int q = 0; q < n; ++q) {
        net.fixed[wire[static_cast<std::size_t>(q)]] = output_bits[static_cast<std::size_t>(q)] - '0';
    }
    return net;
}

NetworkStats network_stats(const TensorNetwork& network) {
    NetworkStats stats;
    stats.variable_count = static_cast<std::size_t>(network.variable_count);
    for (const Tensor& t : network.tensors) {
        if (t.rank() == 0) {
            ++stats.scalar_count;
        } else {
            ++stats.tensor_count;
        }
        stats.max_rank = std::max(stats.max_rank, t.rank());
    }
    return stats;
}

LineGraph::LineGraph(int vertex_count, std::vector<std::vector<int>> hyperedges)
    : vertex_count_(vertex_count), hyperedges_(std::move(hyperedges)) {
    adjacency_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (const auto& edge : hyperedges_) {
        for (const int u : edge) {
            if (u < 0 || u >= vertex_count_) {
                throw std::invalid_argument("hyperedge references vertex " + std::to_string(u) + " out of range");
            }
            for (const int v : edge) {
                if (u != v) {
                    adjacency_[static_cast<std::size_t>(u)].push_back(v);
                }
            }
        }
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    variable_of_.resize(static_cast<std::size_t>(vertex_count_));
    std::iota(variable_of_.begin(), variable_of_.end(), 0);
}

std::size_t LineGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) {
        twice += nbrs.size();
    }
    return twice / 2;
}

LineGraph LineGraph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::vector<int>> edges = hyperedges_;
    for (auto& edge : edges) {
        for (int& v : edge) {
            v = perm[static_cast<std::size_t>(v)];
        }
    }
    LineGraph out(vertex_count_, std::move(edges));
    std::vector<Variable> vars(variable_of_.size());
    for (std::size_t v = 0; v < variable_of_.size(); ++v) {
        vars[static_cast<std::size_t>(perm[v])] = variable_of_[v];
    }
    out.set_variable_map(std::move(vars));
    return out;
}

LineGraph line_graph(const TensorNetwork& network) {
    const TensorNetwork sliced = network.sliced();
    const std::vector<Variable> free = sliced.free_variables();
    std::vector<int> vertex_of(static_cast<std::size_t>(network.variable_count), -1);
    for (std::size_t i = 0; i < free.size(); ++i) {
        vertex_of[static_cast<std::size_t>(free[i])] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> hyperedges;
    hyperedges.reserve(sliced.tensors.size());
    for (const Tensor& t : sliced.tensors) {
        if (t.rank() == 0) {
            continue;
        }
        std::vector<int> edge;
        edge.reserve(t.rank());
        for (const Variable v : t.variables) {
            edge.push_back(vertex_of[static_cast<std::size_t>(v)]);
        }
        hyperedges.push_back(std::move(edge));
    }
    LineGraph lg(static_cast<int>(free.size()), std::move(hyperedges));
    lg.set_variable_map(free);
    return lg;
}

}  // namespace qaoatn
