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

// Command-line front end: graph generation, circuit construction, cost estimation,
// single-amplitude contraction and benchmark sweeps.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaoatn/bench.hpp"
#include "qaoatn/contraction.hpp"
#include "qaoatn/io.hpp"
#include "qaoatn/pipeline.hpp"

namespace {

using namespace qaoatn;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;

struct OrderingFlags {
    int n_repeats = 10;
    double temp = 0.02;
    std::uint64_t seed = 0;
    std::string score = "degree";

    void attach(CLI::App* cmd) {
        cmd->add_option("--n-repeats", n_repeats, "Randomized ordering passes")->check(CLI::PositiveNumber);
        cmd->add_option("--temp", temp, "Boltzmann temperature for vertex sampling")->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", seed, "Seed of the ordering RNG stream");
        cmd->add_option("--score", score, "Elimination score")->check(CLI::IsMember({"degree", "min-fill"}));
    }

    OrderingParams params() const {
        return {n_repeats, temp, seed, score == "min-fill" ? OrderingScore::MinFill : OrderingScore::Degree};
    }
};

/// Writes to `path`, or stdout when the path is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw ParseError(0, "cannot write '" + path + "'");
    }
    fn(out);
}

std::vector<double> parse_angles(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw ParseError(0, "bad angle '" + item + "'");
        }
        out.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

/// Circuit as requested by --mode: fused modes run the fusion pass (a no-op on fused input).
Circuit circuit_for_mode(const Circuit& circuit, PipelineMode mode) {
    return uses_fusion(mode) ? fuse_zz(circuit) : circuit;
}

std::string format_complex(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g %.17g", z.real(), z.imag());
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor-network amplitude simulator for QAOA MaxCut circuits"};
    app.require_subcommand(1);

    // gen-graph
    int gg_n = 0;
    int gg_d = 3;
    std::uint64_t gg_seed = 0;
    std::string gg_out;
    auto* gen = app.add_subcommand("gen-graph", "Random d-regular graph");
    gen->add_option("--n", gg_n, "Number of nodes")->required();
    gen->add_option("--d", gg_d, "Degree");
    gen->add_option("--seed", gg_seed, "Graph seed");
    gen->add_option("-o,--output", gg_out, "Output file (default stdout)");

    // circuit
    std::string c_graph;
    int c_p = 1;
    std::string c_gamma;
    std::string c_beta;
    bool c_fused = false;
    std::string c_out;
    auto* circ = app.add_subcommand("circuit", "Build a QAOA MaxCut circuit");
    circ->add_option("--graph", c_graph, "Graph file")->required();
    circ->add_option("--p", c_p, "QAOA depth")->check(CLI::NonNegativeNumber);
    circ->add_option("--gamma", c_gamma, "Comma-separated gamma angles (default 0.3 + 0.1 k)");
    circ->add_option("--beta", c_beta, "Comma-separated beta angles (default 0.5 - 0.05 k)");
    circ->add_flag("--fused", c_fused, "Emit ZZ and XPow gates");
    circ->add_option("-o,--output", c_out, "Output file (default stdout)");

    // cost
    std::string k_circuit;
    std::string k_mode = "default";
    std::string k_bits;
    std::string k_order_out;
    OrderingFlags k_ordering;
    auto* cost = app.add_subcommand("cost", "Contraction width and cost estimate");
    cost->add_option("--circuit", k_circuit, "Circuit file")->required();
    cost->add_option("--mode", k_mode, "default, diagonal, zz or zz+diagonal");
    cost->add_option("--bits", k_bits, "Output bitstring (default all zeros)");
    cost->add_option("--order-out", k_order_out, "Write the elimination order here");
    k_ordering.attach(cost);

    // amplitude
    std::string a_circuit;
    std::string a_bits;
    std::string a_mode = "zz+diagonal";
    bool a_oracle = false;
    int a_rank_cap = kDefaultRankCap;
    OrderingFlags a_ordering;
    auto* amp = app.add_subcommand("amplitude", "Contract the network for one amplitude");
    amp->add_option("--circuit", a_circuit, "Circuit file")->required();
    amp->add_option("--bits", a_bits, "Output bitstring (default all zeros)");
    amp->add_option("--mode", a_mode, "default, diagonal, zz or zz+diagonal");
    amp->add_flag("--oracle", a_oracle, "Cross-check against the state-vector simulator");
    amp->add_option("--rank-cap", a_rank_cap, "Largest intermediate rank allowed");
    a_ordering.attach(amp);

    // bench
    std::string b_spec;
    std::string b_out;
    auto* bench = app.add_subcommand("bench", "Run a benchmark sweep");
    bench->add_option("--spec", b_spec, "Spec file (key=value)")->required();
    bench->add_option("-o,--output", b_out, "CSV output (default stdout)");

    // summarize
    std::string s_csv;
    std::string s_dir = "summary";
    auto* summ = app.add_subcommand("summarize", "Aggregate a benchmark CSV");
    summ->add_option("--csv", s_csv, "Benchmark CSV")->required();
    summ->add_option("-o,--output", s_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*gen) {
            const ProblemGraph g = random_regular_graph(gg_n, gg_d, gg_seed);
            with_output(gg_out, [&](std::ostream& out) { write_graph(out, g); });
        } else if (*circ) {
            const ProblemGraph g = load_graph(c_graph);
            QaoaParams params = default_angles(static_cast<std::size_t>(c_p));
            if (!c_gamma.empty() || !c_beta.empty()) {
                params.gammas = parse_angles(c_gamma);
                params.betas = parse_angles(c_beta);
                if (params.depth() != static_cast<std::size_t>(c_p)) {
                    throw std::invalid_argument("--gamma/--beta must list exactly p = " + std::to_string(c_p) +
                                                " angles each");
                }
            }
            const Circuit c = build_qaoa_maxcut_circuit(g, params, c_fused);
            with_output(c_out, [&](std::ostream& out) { write_circuit(out, c); });
        } else if (*cost) {
            const PipelineMode mode = parse_mode(k_mode);
            const Circuit c = circuit_for_mode(load_circuit(k_circuit), mode);
            const std::string bits = k_bits.empty() ? std::string(static_cast<std::size_t>(c.qubit_count()), '0') : k_bits;
            const TensorNetwork net = circuit_to_network(c, network_mode(mode), bits);
            const LineGraph lg = line_graph(net);
            const auto t0 = std::chrono::steady_clock::now();
            const OrderingResult r = rgreedy_order(lg, k_ordering.params());
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cout << "mode " << to_string(mode) << '\n'
                      << "vertices " << lg.vertex_count() << '\n'
                      << "width " << r.cost.width << '\n'
                      << "flops_2c " << r.cost.flops_2c << '\n'
                      << "flops_sum " << r.cost.flops_sum << '\n'
                      << "memory_bytes " << r.cost.memory_bytes << '\n'
                      << "best_pass " << r.best_pass << '\n'
                      << "order_seconds " << seconds << '\n';
            if (!k_order_out.empty()) {
                with_output(k_order_out, [&](std::ostream& out) { write_order(out, r.order); });
            }
        } else if (*amp) {
            const PipelineMode mode = parse_mode(a_mode);
            const Circuit c = circuit_for_mode(load_circuit(a_circuit), mode);
            const std::string bits = a_bits.empty() ? std::string(static_cast<std::size_t>(c.qubit_count()), '0') : a_bits;
            const TensorNetwork net = circuit_to_network(c, network_mode(mode), bits);
            const OrderingResult r = rgreedy_order(line_graph(net), a_ordering.params());
            const ContractionResult result = contract(net, r.order, a_rank_cap);
            std::cout << "amplitude " << format_complex(result.amplitude) << '\n'
                      << "width " << r.cost.width << '\n';
            if (a_oracle) {
                const Complex oracle = statevector_amplitude(c, bits);
                std::cout << "oracle " << format_complex(oracle) << '\n'
                          << "difference " << std::abs(result.amplitude - oracle) << '\n';
            }
        } else if (*bench) {
            std::ifstream in(b_spec);
            if (!in) {
                throw ParseError(0, "cannot open '" + b_spec + "'");
            }
            const BenchSpec spec = parse_bench_spec(in);
            const std::vector<BenchRow> rows = run_benchmark(spec);
            with_output(b_out, [&](std::ostream& out) { write_bench_csv(out, rows); });
        } else if (*summ) {
            std::ifstream in(s_csv);
            if (!in) {
                throw ParseError(0, "cannot open '" + s_csv + "'");
            }
            const Summary summary = summarize(read_bench_csv(in));
            std::filesystem::create_directories(s_dir);
            const std::filesystem::path dir(s_dir);
            with_output((dir / "summary.md").string(), [&](std::ostream& out) { write_summary_markdown(out, summary); });
            with_output((dir / "aggregate.csv").string(), [&](std::ostream& out) { write_aggregate_csv(out, summary); });
            with_output((dir / "feasibility.csv").string(),
                        [&](std::ostream& out) { write_feasibility_csv(out, summary); });
        }
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
