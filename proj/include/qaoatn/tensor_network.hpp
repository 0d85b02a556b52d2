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

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "qaoatn/circuit.hpp"

namespace qaoatn {

using Variable = int;

/// Dense tensor with every dimension of size 2. The first variable is the most
/// significant bit of the flat data index.
struct Tensor {
    int id = 0;
    std::vector<Variable> variables;
    std::vector<Complex> data;

    std::size_t rank() const { return variables.size(); }

    /// Sub-tensor with `variable` pinned to `bit`. Returns a copy when the variable is absent.
    Tensor sliced(Variable variable, int bit) const;
};

enum class NetworkMode { Full, Diagonal };

struct NetworkStats {
    std::size_t tensor_count = 0;  // rank >= 1
    std::size_t scalar_count = 0;  // rank 0 (the circuit phase)
    std::size_t variable_count = 0;
    std::size_t max_rank = 0;
};

struct TensorNetwork {
    std::vector<Tensor> tensors;
    int variable_count = 0;
    std::map<Variable, int> fixed;

    /// Checks tensor shapes, variable ranges and fixed-variable bits. Throws std::invalid_argument.
    void validate() const;

    /// Variables not pinned by `fixed`, ascending.
    std::vector<Variable> free_variables() const;

    /// Equivalent network where every fixed variable has been sliced out of the tensors.
    /// Tensor ids are preserved; `fixed` is carried over so variable ids stay meaningful.
    TensorNetwork sliced() const;
};

/// Network whose full contraction equals <output_bits| circuit |0...0>, phase included.
/// output_bits[q] is the bit of qubit q. Diagonal mode attaches diagonal gates to the
/// wires' current variables without creating new ones.
TensorNetwork circuit_to_network(const Circuit& circuit, NetworkMode mode, std::string_view output_bits);

NetworkStats network_stats(const TensorNetwork& network);

/// Hypergraph view of a network: one vertex per unfixed variable, one hyperedge per
/// tensor (after slicing out fixed variables). Vertex ids are dense 0..vertex_count-1;
/// `variable_of` maps them back to network variables.
class LineGraph {
public:
    LineGraph() = default;
    LineGraph(int vertex_count, std::vector<std::vector<int>> hyperedges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }
    /// Sorted neighbor lists of the pairwise co-occurrence graph.
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
    std::size_t edge_count() const;

    const std::vector<Variable>& variable_of() const { return variable_of_; }
    void set_variable_map(std::vector<Variable> variable_of) { variable_of_ = std::move(variable_of); }

    /// Same graph with vertex v renamed to perm[v].
    LineGraph relabeled(const std::vector<int>& perm) const;

private:
    int vertex_count_ = 0;
    std::vector<std::vector<int>> hyperedges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Variable> variable_of_;
};

/// Builds the line graph of `network`. Tensors whose variables are all fixed contribute
/// no hyperedge (they are plain scalars).
LineGraph line_graph(const TensorNetwork& network);

}  // namespace qaoatn
