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

#include "qaoatn/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "qaoatn/io.hpp"

namespace qaoatn {

namespace {

std::string shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string fixed6(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) {
        out.push_back(trim(cur));
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

template <typename T>
T parse_number(const std::string& text, int line, const std::string& what) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || text.empty()) {
        throw ParseError(line, what + ": '" + text + "' is not a valid number");
    }
    return value;
}

template <typename T>
std::vector<T> parse_int_list(const std::string& text, int line, const std::string& key) {
    std::vector<T> out;
    for (const std::string& item : split(text, ',')) {
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const T lo = parse_number<T>(trim(item.substr(0, dots)), line, key);
            const T hi = parse_number<T>(trim(item.substr(dots + 2)), line, key);
            if (hi < lo) {
                throw ParseError(line, key + ": empty range '" + item + "'");
            }
            for (T v = lo; v <= hi; ++v) {
                out.push_back(v);
            }
        } else {
            out.push_back(parse_number<T>(item, line, key));
        }
    }
    if (out.empty()) {
        throw ParseError(line, key + ": empty list");
    }
    return out;
}

bool parse_bool(const std::string& text, int line, const std::string& key) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ParseError(line, key + ": expected true or false, got '" + text + "'");
}

double population_sigma(const std::vector<double>& values) {
    if (values.empty()) {
        return 0.0;
    }
    double mean = 0.0;
    for (const double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (const double v : values) {
        var += (v - mean) * (v - mean);
    }
    return std::sqrt(var / static_cast<double>(values.size()));
}

int mode_rank(PipelineMode mode) { return static_cast<int>(mode); }

}  // namespace

ProblemGraph random_regular_graph(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0) {
        throw std::invalid_argument("random regular graph needs n >= 1 and d >= 0");
    }
    if (d >= n) {
        throw std::invalid_argument("degree " + std::to_string(d) + " must be smaller than n = " + std::to_string(n));
    }
    if ((static_cast<long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("n * d must be even (got n = " + std::to_string(n) + ", d = " +
                                    std::to_string(d) + ")");
    }
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    std::vector<ProblemGraph::Edge> edges;
    std::set<ProblemGraph::Edge> seen;
    for (int attempt = 0; attempt < kRandomGraphMaxAttempts; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v) {
            stubs.insert(stubs.end(), static_cast<std::size_t>(d), v);
        }
        std::shuffle(stubs.begin(), stubs.end(), rng);
        edges.clear();
        seen.clear();
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = std::min(stubs[i], stubs[i + 1]);
            const int v = std::max(stubs[i], stubs[i + 1]);
            if (u == v || !seen.insert({u, v}).second) {
                simple = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (simple) {
            std::sort(edges.begin(), edges.end());
            return ProblemGraph(n, edges);
        }
    }
    throw std::runtime_error("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                             " nodes after " + std::to_string(kRandomGraphMaxAttempts) + " attempts");
}

BenchSpec parse_bench_spec(std::istream& in) {
    BenchSpec spec;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string text = trim(raw);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(line, "expected key=value");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key == "n") {
            spec.n_values = parse_int_list<int>(value, line, key);
        } else if (key == "degree" || key == "d") {
            spec.degree = parse_number<int>(value, line, key);
        } else if (key == "p") {
            spec.p_values = parse_int_list<int>(value, line, key);
        } else if (key == "seeds") {
            spec.seeds = parse_int_list<std::uint64_t>(value, line, key);
        } else if (key == "modes") {
            spec.modes.clear();
            for (const std::string& m : split(value, ',')) {
                try {
                    spec.modes.push_back(parse_mode(m));
                } catch (const std::invalid_argument& err) {
                    throw ParseError(line, err.what());
                }
            }
        } else if (key == "n_repeats") {
            spec.ordering.n_repeats = parse_number<int>(value, line, key);
        } else if (key == "temp") {
            spec.ordering.temp = parse_number<double>(value, line, key);
        } else if (key == "order_seed") {
            spec.ordering.seed = parse_number<std::uint64_t>(value, line, key);
        } else if (key == "score") {
            if (value == "degree") {
                spec.ordering.score = OrderingScore::Degree;
            } else if (value == "min-fill") {
                spec.ordering.score = OrderingScore::MinFill;
            } else {
                throw ParseError(line, "score: expected degree or min-fill");
            }
        } else if (key == "contract") {
            spec.contract = parse_bool(value, line, key);
        } else if (key == "rank_cap") {
            spec.rank_cap = parse_number<int>(value, line, key);
        } else if (key == "threads") {
            spec.threads = parse_number<int>(value, line, key);
        } else {
            throw ParseError(line, "unknown key '" + key + "'");
        }
    }
    if (spec.ordering.n_repeats < 1) {
        throw ParseError(0, "n_repeats must be at least 1");
    }
    if (spec.ordering.temp < 0.0) {
        throw ParseError(0, "temp must be non-negative");
    }
    if (spec.threads < 1) {
        throw ParseError(0, "threads must be at least 1");
    }
    for (const int p : spec.p_values) {
        if (p < 0) {
            throw ParseError(0, "p values must be non-negative");
        }
    }
    return spec;
}

BenchRow run_cell(const ProblemGraph& graph, std::uint64_t graph_seed, int degree, int p, PipelineMode mode,
                  const BenchSpec& spec) {
    using Clock = std::chrono::steady_clock;
    BenchRow row;
    row.graph_seed = graph_seed;
    row.n = graph.node_count();
    row.degree = degree;
    row.p = p;
    row.mode = mode;
    row.n_repeats = spec.ordering.n_repeats;
    row.temp = spec.ordering.temp;

    const Pipeline pipeline = build_pipeline(graph, default_angles(static_cast<std::size_t>(p)), mode);
    const auto t0 = Clock::now();
    const OrderingResult ordering = rgreedy_order(pipeline.line_graph, spec.ordering);
    row.order_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    row.width = ordering.cost.width;
    row.log2_flops_2c = ordering.cost.width;
    row.memory_bytes = ordering.cost.memory_bytes;

    if (spec.contract && row.width <= spec.rank_cap) {
        const auto t1 = Clock::now();
        try {
            const ContractionResult result = contract(pipeline.network, ordering.order, spec.rank_cap);
            row.contract_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
            row.amplitude = result.amplitude;
            row.contracted = true;
        } catch (const std::exception&) {
            row.contracted = false;
        }
    }
    return row;
}

std::vector<BenchRow> run_benchmark(const BenchSpec& spec) {
    struct Cell {
        std::size_t graph_index;
        std::uint64_t seed;
        int p;
        PipelineMode mode;
    };
    std::vector<ProblemGraph> graphs;
    std::vector<Cell> cells;
    for (const std::uint64_t seed : spec.seeds) {
        for (const int n : spec.n_values) {
            graphs.push_back(random_regular_graph(n, spec.degree, seed));
            for (const int p : spec.p_values) {
                for (const PipelineMode mode : spec.modes) {
                    cells.push_back({graphs.size() - 1, seed, p, mode});
                }
            }
        }
    }

    std::vector<BenchRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& c = cells[i];
            rows[i] = run_cell(graphs[c.graph_index], c.seed, spec.degree, c.p, c.mode, spec);
        }
    };
    const int threads = std::max(1, std::min<int>(spec.threads, static_cast<int>(cells.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchCsvHeader << '\n';
    for (const BenchRow& r : rows) {
        out << r.graph_seed << ',' << r.n << ',' << r.degree << ',' << r.p << ',' << to_string(r.mode) << ','
            << r.n_repeats << ',' << shortest(r.temp) << ',' << fixed6(r.order_seconds) << ',' << r.width << ','
            << r.log2_flops_2c << ',' << shortest(r.memory_bytes) << ',' << (r.contracted ? "true" : "false") << ',';
        if (r.contracted && r.amplitude) {
            out << shortest(r.amplitude->real()) << ',' << shortest(r.amplitude->imag()) << ',';
        } else {
            out << ",,";
        }
        if (r.contract_seconds) {
            out << fixed6(*r.contract_seconds);
        }
        out << '\n';
    }
}

std::vector<BenchRow> read_bench_csv(std::istream& in) {
    std::string raw;
    int line = 1;
    if (!std::getline(in, raw) || trim(raw) != kBenchCsvHeader) {
        throw ParseError(1, "missing or unexpected CSV header");
    }
    std::vector<BenchRow> rows;
    while (std::getline(in, raw)) {
        ++line;
        if (trim(raw).empty()) {
            continue;
        }
        const std::vector<std::string> f = split(trim(raw), ',');
        if (f.size() != 15) {
            throw ParseError(line, "expected 15 fields, got " + std::to_string(f.size()));
        }
        BenchRow r;
        r.graph_seed = parse_number<std::uint64_t>(f[0], line, "graph_seed");
        r.n = parse_number<int>(f[1], line, "n");
        r.degree = parse_number<int>(f[2], line, "degree");
        r.p = parse_number<int>(f[3], line, "p");
        try {
            r.mode = parse_mode(f[4]);
        } catch (const std::invalid_argument& err) {
            throw ParseError(line, err.what());
        }
        r.n_repeats = parse_number<int>(f[5], line, "n_repeats");
        r.temp = parse_number<double>(f[6], line, "temp");
        r.order_seconds = parse_number<double>(f[7], line, "order_seconds");
        r.width = parse_number<int>(f[8], line, "width");
        r.log2_flops_2c = parse_number<int>(f[9], line, "log2_flops_2c");
        r.memory_bytes = parse_number<double>(f[10], line, "memory_bytes");
        r.contracted = parse_bool(f[11], line, "contracted");
        if (r.contracted) {
            r.amplitude = Complex{parse_number<double>(f[12], line, "amp_re"), parse_number<double>(f[13], line, "amp_im")};
        } else if (!f[12].empty() || !f[13].empty()) {
            throw ParseError(line, "amplitude present in an uncontracted row");
        }
        if (!f[14].empty()) {
            r.contract_seconds = parse_number<double>(f[14], line, "contract_seconds");
        }
        if (r.log2_flops_2c != r.width || r.memory_bytes != std::ldexp(16.0, r.width)) {
            throw ParseError(line, "cost columns inconsistent with width");
        }
        rows.push_back(r);
    }
    return rows;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

Summary summarize(const std::vector<BenchRow>& rows, const std::vector<int>& budgets) {
    if (rows.empty()) {
        throw std::invalid_argument("nothing to summarize");
    }
    Summary summary;

    // (n, p, mode) -> widths over seeds
    std::map<std::tuple<int, int, int>, std::vector<double>> widths;
    // (n, mode, seed) -> (p, width)
    std::map<std::tuple<int, int, std::uint64_t>, std::vector<std::pair<int, int>>> per_graph;
    for (const BenchRow& r : rows) {
        widths[{r.n, r.p, mode_rank(r.mode)}].push_back(static_cast<double>(r.log2_flops_2c));
        per_graph[{r.n, mode_rank(r.mode), r.graph_seed}].emplace_back(r.p, r.width);
    }

    for (const auto& [key, values] : widths) {
        AggregateCell cell;
        cell.n = std::get<0>(key);
        cell.p = std::get<1>(key);
        cell.mode = static_cast<PipelineMode>(std::get<2>(key));
        cell.count = values.size();
        cell.median_log2_flops = median(values);
        cell.sigma_log2_flops = population_sigma(values);
        cell.median_width = cell.median_log2_flops;
        summary.cells.push_back(cell);
    }

    for (const int budget : budgets) {
        std::map<std::pair<int, int>, std::vector<double>> max_p;
        for (const auto& [key, samples] : per_graph) {
            int best = 0;
            for (const auto& [p, width] : samples) {
                if (width <= budget) {
                    best = std::max(best, p);
                }
            }
            max_p[{std::get<0>(key), std::get<1>(key)}].push_back(best);
        }
        for (const auto& [key, values] : max_p) {
            summary.depth_table.push_back(
                {key.first, static_cast<PipelineMode>(key.second), budget, median(values)});
        }

        std::map<std::pair<int, int>, std::optional<int>> max_n;
        for (const AggregateCell& cell : summary.cells) {
            auto& slot = max_n[{cell.p, mode_rank(cell.mode)}];
            if (cell.median_width <= budget && (!slot || *slot < cell.n)) {
                slot = cell.n;
            }
        }
        for (const auto& [key, n] : max_n) {
            summary.size_table.push_back({key.first, static_cast<PipelineMode>(key.second), budget, n});
        }
    }
    return summary;
}

namespace {

std::vector<PipelineMode> modes_present(const Summary& s) {
    std::set<int> seen;
    for (const auto& c : s.cells) {
        seen.insert(mode_rank(c.mode));
    }
    std::vector<PipelineMode> out;
    for (const int m : seen) {
        out.push_back(static_cast<PipelineMode>(m));
    }
    return out;
}

void markdown_header(std::ostream& out, const std::string& first, const std::vector<PipelineMode>& modes) {
    out << "| " << first << " |";
    for (const PipelineMode m : modes) {
        out << ' ' << to_string(m) << " |";
    }
    out << "\n|---|";
    for (std::size_t i = 0; i < modes.size(); ++i) {
        out << "---|";
    }
    out << '\n';
}

}  // namespace

void write_summary_markdown(std::ostream& out, const Summary& summary) {
    const std::vector<PipelineMode> modes = modes_present(summary);
    std::map<int, std::map<int, std::map<int, const AggregateCell*>>> by_n;  // n -> p -> mode
    for (const auto& c : summary.cells) {
        by_n[c.n][c.p][mode_rank(c.mode)] = &c;
    }

    out << "# Contraction cost summary\n\n";
    out << "Cells show median log2(FLOPs) = contraction width, with the 1-sigma spread over graph seeds.\n\n";
    for (const auto& [n, by_p] : by_n) {
        out << "## n = " << n << "\n\n";
        markdown_header(out, "p", modes);
        for (const auto& [p, by_mode] : by_p) {
            out << "| " << p << " |";
            for (const PipelineMode m : modes) {
                const auto it = by_mode.find(mode_rank(m));
                if (it == by_mode.end()) {
                    out << " - |";
                } else {
                    out << ' ' << shortest(it->second->median_log2_flops) << " ± "
                        << shortest(std::round(it->second->sigma_log2_flops * 100.0) / 100.0) << " |";
                }
            }
            out << '\n';
        }
        out << '\n';
    }

    std::set<int> budgets;
    for (const auto& d : summary.depth_table) {
        budgets.insert(d.budget);
    }
    for (const int budget : budgets) {
        out << "## Feasibility under width budget " << budget << " (" << shortest(std::ldexp(16.0, budget))
            << " bytes)\n\n";
        out << "Median over seeds of the largest feasible p:\n\n";
        markdown_header(out, "n", modes);
        std::map<int, std::map<int, double>> table;
        for (const auto& d : summary.depth_table) {
            if (d.budget == budget) {
                table[d.n][mode_rank(d.mode)] = d.median_max_p;
            }
        }
        for (const auto& [n, row] : table) {
            out << "| " << n << " |";
            for (const PipelineMode m : modes) {
                const auto it = row.find(mode_rank(m));
                out << ' ' << (it == row.end() ? std::string("-") : shortest(it->second)) << " |";
            }
            out << '\n';
        }
        out << "\nLargest n whose median width fits:\n\n";
        markdown_header(out, "p", modes);
        std::map<int, std::map<int, std::optional<int>>> sizes;
        for (const auto& s : summary.size_table) {
            if (s.budget == budget) {
                sizes[s.p][mode_rank(s.mode)] = s.max_n;
            }
        }
        for (const auto& [p, row] : sizes) {
            out << "| " << p << " |";
            for (const PipelineMode m : modes) {
                const auto it = row.find(mode_rank(m));
                out << ' ' << (it == row.end() || !it->second ? std::string("-") : std::to_string(*it->second))
                    << " |";
            }
            out << '\n';
        }
        out << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, const Summary& summary) {
    out << "n,p,mode,count,median_log2_flops,sigma_log2_flops,median_width\n";
    for (const auto& c : summary.cells) {
        out << c.n << ',' << c.p << ',' << to_string(c.mode) << ',' << c.count << ',' << shortest(c.median_log2_flops)
            << ',' << shortest(c.sigma_log2_flops) << ',' << shortest(c.median_width) << '\n';
    }
}

void write_feasibility_csv(std::ostream& out, const Summary& summary) {
    out << "kind,budget,key,mode,value\n";
    for (const auto& d : summary.depth_table) {
        out << "max_p," << d.budget << ',' << d.n << ',' << to_string(d.mode) << ',' << shortest(d.median_max_p)
            << '\n';
    }
    for (const auto& s : summary.size_table) {
        out << "max_n," << s.budget << ',' << s.p << ',' << to_string(s.mode) << ','
            << (s.max_n ? std::to_string(*s.max_n) : std::string()) << '\n';
    }
}

}  // namespace qaoatn
