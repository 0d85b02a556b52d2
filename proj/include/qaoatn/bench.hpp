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
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qaoatn/circuit.hpp"
#include "qaoatn/contraction.hpp"
#include "qaoatn/ordering.hpp"
#include "qaoatn/pipeline.hpp"

namespace qaoatn {

inline constexpr int kRandomGraphMaxAttempts = 100000;

/// Uniform-ish simple d-regular graph from the configuration model: stubs are shuffled
/// and paired, and any pairing with a self-loop or repeated edge is rejected and redrawn.
/// Edges are returned sorted. Throws std::invalid_argument for infeasible (n, d) and
/// std::runtime_error after kRandomGraphMaxAttempts rejected pairings.
ProblemGraph random_regular_graph(int n, int d, std::uint64_t seed);

struct BenchSpec {
    std::vector<int> n_values{40};
    int degree = 3;
    std::vector<int> p_values{1};
    std::vector<PipelineMode> modes{kAllModes.begin(), kAllModes.end()};
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4};
    OrderingParams ordering;
    bool contract = false;
    int rank_cap = kDefaultRankCap;
    int threads = 1;
};

/// Flat key=value text, one per line, '#' comments. Keys: n, degree (or d), p, modes,
/// seeds, n_repeats, temp, order_seed, score, contract, rank_cap, threads.
/// List values are comma separated; "a..b" expands to an inclusive integer range.
BenchSpec parse_bench_spec(std::istream& in);

struct BenchRow {
    std::uint64_t graph_seed = 0;
    int n = 0;
    int degree = 0;
    int p = 0;
    PipelineMode mode = PipelineMode::Default;
    int n_repeats = 0;
    double temp = 0.0;
    double order_seconds = 0.0;
    int width = 0;
    int log2_flops_2c = 0;
    double memory_bytes = 0.0;
    bool contracted = false;
    std::optional<Complex> amplitude;
    std::optional<double> contract_seconds;
};

/// Runs every (seed, n, p, mode) cell. Rows come back ordered by seed, n, p, mode.
/// Contraction is attempted only when requested and the width fits the rank cap; a
/// failed contraction leaves the row uncontracted instead of aborting the sweep.
std::vector<BenchRow> run_benchmark(const BenchSpec& spec);

/// One cell; exposed for tools that sweep a single configuration.
BenchRow run_cell(const ProblemGraph& graph, std::uint64_t graph_seed, int degree, int p, PipelineMode mode,
                  const BenchSpec& spec);

inline constexpr const char* kBenchCsvHeader =
    "graph_seed,n,degree,p,mode,n_repeats,temp,order_seconds,width,log2_flops_2c,memory_bytes,contracted,amp_re,"
    "amp_im,contract_seconds";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
/// Throws ParseError with the offending line on malformed input.
std::vector<BenchRow> read_bench_csv(std::istream& in);

struct AggregateCell {
    int n = 0;
    int p = 0;
    PipelineMode mode = PipelineMode::Default;
    std::size_t count = 0;
    double median_log2_flops = 0.0;
    double sigma_log2_flops = 0.0;  // population standard deviation over seeds
    double median_width = 0.0;
};

struct FeasibleDepth {
    int n = 0;
    PipelineMode mode = PipelineMode::Default;
    int budget = 0;
    double median_max_p = 0.0;  // median over seeds of the largest p with width <= budget
};

struct FeasibleSize {
    int p = 0;
    PipelineMode mode = PipelineMode::Default;
    int budget = 0;
    std::optional<int> max_n;  // largest n whose median width fits the budget
};

struct Summary {
    std::vector<AggregateCell> cells;
    std::vector<FeasibleDepth> depth_table;
    std::vector<FeasibleSize> size_table;
};

double median(std::vector<double> values);

Summary summarize(const std::vector<BenchRow>& rows,
                  const std::vector<int>& budgets = {kLaptopWidthBudget, kSupercomputerWidthBudget});

void write_summary_markdown(std::ostream& out, const Summary& summary);
void write_aggregate_csv(std::ostream& out, const Summary& summary);
void write_feasibility_csv(std::ostream& out, const Summary& summary);

}  // namespace qaoatn
