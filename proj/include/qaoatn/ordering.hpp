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

#include <cstdint>
#include <utility>
#include <vector>

#include "qaoatn/tensor_network.hpp"

namespace qaoatn {

/// Elimination sequence over line-graph vertex ids.
struct ContractionOrder {
    std::vector<int> sequence;

    bool operator==(const ContractionOrder&) const = default;
};

/// Cost of contracting along an order. flops_2c and memory_bytes are derived from the
/// width alone: 2^C and 16 * 2^C (one complex<double> per entry of the largest tensor).
struct CostReport {
    int width = 0;
    std::vector<int> step_ranks;
    double flops_2c = 1.0;
    double flops_sum = 0.0;
    double memory_bytes = 16.0;
};

/// Throws std::invalid_argument unless `order` is a permutation of 0..vertex_count-1.
void check_permutation(const ContractionOrder& order, int vertex_count);

/// Simulates vertex elimination on the line graph's adjacency: each step records the
/// current degree of the eliminated vertex, then turns its neighborhood into a clique.
CostReport contraction_width(const LineGraph& lg, const ContractionOrder& order);

/// Per-vertex elimination score: the degree (rank of the intermediate it produces) or
/// the number of fill edges its elimination would add.
enum class OrderingScore { Degree, MinFill };

/// Deterministic lowest-score elimination; ties go to the lower degree, then the smaller id.
ContractionOrder greedy_order(const LineGraph& lg, OrderingScore score = OrderingScore::Degree);

struct OrderingParams {
    int n_repeats = 10;
    double temp = 0.02;
    std::uint64_t seed = 0;
    OrderingScore score = OrderingScore::Degree;
};

struct OrderingResult {
    ContractionOrder order;
    CostReport cost;
    int best_pass = 0;
};

/// Best of n_repeats elimination passes. Pass 0 is greedy_order; pass k > 0 samples each
/// eliminated vertex with weight exp(-(score - min_score) / temp) from an RNG seeded
/// with seed + k. Lowest width wins, then lowest flops_sum, then the earliest pass.
OrderingResult rgreedy_order(const LineGraph& lg, const OrderingParams& params = {});

/// Largest contraction width whose 16 * 2^C byte footprint fits in `bytes`.
int width_budget_for_memory(double bytes);

inline constexpr int kLaptopWidthBudget = 28;         // 4 GiB
inline constexpr int kSupercomputerWidthBudget = 45;  // 800 TiB

}  // namespace qaoatn
