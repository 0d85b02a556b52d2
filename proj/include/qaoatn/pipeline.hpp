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
#include <functional>
#include <string>
#include <string_view>

#include "qaoatn/circuit.hpp"
#include "qaoatn/ordering.hpp"
#include "qaoatn/tensor_network.hpp"

namespace qaoatn {

/// The four circuit/network configurations compared by the benchmarks.
enum class PipelineMode { Default, Diagonal, Zz, ZzDiagonal };

inline constexpr std::array<PipelineMode, 4> kAllModes = {PipelineMode::Default, PipelineMode::Diagonal,
                                                          PipelineMode::Zz, PipelineMode::ZzDiagonal};

std::string to_string(PipelineMode mode);
/// Accepts "default", "diagonal", "zz", "zz+diagonal". Throws std::invalid_argument otherwise.
PipelineMode parse_mode(std::string_view text);

inline bool uses_fusion(PipelineMode mode) { return mode == PipelineMode::Zz || mode == PipelineMode::ZzDiagonal; }
inline NetworkMode network_mode(PipelineMode mode) {
    return (mode == PipelineMode::Diagonal || mode == PipelineMode::ZzDiagonal) ? NetworkMode::Diagonal
                                                                                : NetworkMode::Full;
}

/// Maps a depth p to the angle vectors used for it.
using AngleRule = std::function<QaoaParams(std::size_t p)>;

/// gamma_k = 0.3 + 0.1 k, beta_k = 0.5 - 0.05 k for rounds k = 0..p-1.
QaoaParams default_angles(std::size_t p);

struct Pipeline {
    Circuit circuit;
    TensorNetwork network;
    LineGraph line_graph;
};

/// graph -> circuit -> network sliced at `bits` -> line graph. Empty `bits` means all zeros.
Pipeline build_pipeline(const ProblemGraph& graph, const QaoaParams& params, PipelineMode mode,
                        std::string_view bits = {});

inline constexpr int kFeasibleDepthCutoff = 8;

/// Largest p in 1..kFeasibleDepthCutoff whose rgreedy width stays within width_budget; 0 if none.
int feasible_max_p(const ProblemGraph& graph, const AngleRule& angles, PipelineMode mode, int width_budget,
                   const OrderingParams& ordering = {});

}  // namespace qaoatn
