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

#include "qaoatn/pipeline.hpp"

#include <stdexcept>

namespace qaoatn {

std::string to_string(PipelineMode mode) {
    switch (mode) {
        case PipelineMode::Default: return "default";
        case PipelineMode::Diagonal: return "diagonal";
        case PipelineMode::Zz: return "zz";
        case PipelineMode::ZzDiagonal: return "zz+diagonal";
    }
    return "?";
}

PipelineMode parse_mode(std::string_view text) {
    for (const PipelineMode mode : kAllModes) {
        if (text == to_string(mode)) {
            return mode;
        }
    }
    throw std::invalid_argument("unknown mode '" + std::string(text) +
                                "' (expected default, diagonal, zz or zz+diagonal)");
}

QaoaParams default_angles(std::size_t p) {
    QaoaParams params;
    for (std::size_t k = 0; k < p; ++k) {
        params.gammas.push_back(0.3 + 0.1 * static_cast<double>(k));
        params.betas.push_back(0.5 - 0.05 * static_cast<double>(k));
    }
    return params;
}

Pipeline build_pipeline(const ProblemGraph& graph, const QaoaParams& params, PipelineMode mode,
                        std::string_view bits) {
    Circuit circuit = build_qaoa_maxcut_circuit(graph, params, uses_fusion(mode));
    const std::string zeros(static_cast<std::size_t>(circuit.qubit_count()), '0');
    TensorNetwork network = circuit_to_network(circuit, network_mode(mode), bits.empty() ? zeros : bits);
    LineGraph lg = line_graph(network);
    return {std::move(circuit), std::move(network), std::move(lg)};
}

int feasible_max_p(const ProblemGraph& graph, const AngleRule& angles, PipelineMode mode, int width_budget,
                   const OrderingParams& ordering) {
    if (width_budget < 0) {
        throw std::invalid_argument("width budget must be non-negative");
    }
    int best = 0;
    for (int p = 1; p <= kFeasibleDepthCutoff; ++p) {
        const Pipeline pipeline = build_pipeline(graph, angles(static_cast<std::size_t>(p)), mode);
        if (rgreedy_order(pipeline.line_graph, ordering).cost.width <= width_budget) {
            best = p;
        }
    }
    return best;
}

}  // namespace qaoatn
