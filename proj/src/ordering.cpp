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

#include "qaoatn/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qaoatn {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

/// Mutable elimination graph. Vertices are kept in buckets keyed by their current score
/// (degree or fill-in) so low-score vertices are found without a full scan.
class EliminationGraph {
public:
    EliminationGraph(const LineGraph& lg, OrderingScore kind)
        : kind_(kind), adj_(lg.adjacency()), score_(adj_.size(), 0), bucket_pos_(adj_.size(), 0) {
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            score_[v] = compute_score(static_cast<int>(v));
            bucket_insert(static_cast<int>(v));
        }
        remaining_ = adj_.size();
    }

    std::size_t remaining() const { return remaining_; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    long min_score() const {
        std::size_t s = 0;
        while (buckets_[s].empty()) {
            ++s;
        }
        return static_cast<long>(s);
    }

    long score_limit() const { return static_cast<long>(buckets_.size()); }
    const std::vector<int>& bucket(long score) const { return buckets_[static_cast<std::size_t>(score)]; }

    /// Lowest degree, then lowest id, among the vertices with the given score.
    int first_in_bucket(long score) const {
        const auto& b = bucket(score);
        int best = b.front();
        for (const int v : b) {
            if (degree(v) < degree(best) || (degree(v) == degree(best) && v < best)) {
                best = v;
            }
        }
        return best;
    }

    /// Removes v and connects its neighbors pairwise. Returns the degree of v.
    int eliminate(int v) {
        const auto sv = static_cast<std::size_t>(v);
        bucket_erase(v);
        std::vector<int> nbrs = std::move(adj_[sv]);
        adj_[sv].clear();
        --remaining_;

        std::vector<std::pair<int, int>> new_edges;
        if (kind_ == OrderingScore::MinFill) {
            for (std::size_t a = 0; a < nbrs.size(); ++a) {
                for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                    if (!sorted_contains(adj_[static_cast<std::size_t>(nbrs[a])], nbrs[b])) {
                        new_edges.emplace_back(nbrs[a], nbrs[b]);
                    }
                }
            }
        }

        std::vector<int> merged;
        for (const int u : nbrs) {
            bucket_erase(u);
            auto& au = adj_[static_cast<std::size_t>(u)];
            merged.clear();
            merged.reserve(au.size() + nbrs.size());
            // (au ∪ nbrs) \ {u, v}; both inputs are sorted.
            auto i = au.begin();
            auto j = nbrs.begin();
            while (i != au.end() || j != nbrs.end()) {
                int w;
                if (j == nbrs.end() || (i != au.end() && *i < *j)) {
                    w = *i++;
                } else if (i == au.end() || *j < *i) {
                    w = *j++;
                } else {
                    w = *i++;
                    ++j;
                }
                if (w != u && w != v) {
                    merged.push_back(w);
                }
            }
            au.swap(merged);
        }

        if (kind_ == OrderingScore::MinFill) {
            // Vertices outside the neighborhood keep their adjacency; each new edge between
            // two of their neighbors removes one missing pair.
            for (const auto& [a, b] : new_edges) {
                const auto& na = adj_[static_cast<std::size_t>(a)];
                const auto& nb = adj_[static_cast<std::size_t>(b)];
                const auto& small = na.size() < nb.size() ? na : nb;
                const auto& large = na.size() < nb.size() ? nb : na;
                for (const int w : small) {
                    if (sorted_contains(large, w) && !sorted_contains(nbrs, w)) {
                        bucket_erase(w);
                        --score_[static_cast<std::size_t>(w)];
                        bucket_insert(w);
                    }
                }
            }
        }
        for (const int u : nbrs) {
            score_[static_cast<std::size_t>(u)] = compute_score(u);
            bucket_insert(u);
        }
        return static_cast<int>(nbrs.size());
    }

private:
    long compute_score(int v) const {
        const auto& nv = adj_[static_cast<std::size_t>(v)];
        const long d = static_cast<long>(nv.size());
        if (kind_ == OrderingScore::Degree) {
            return d;
        }
        std::size_t twice_edges = 0;
        for (const int x : nv) {
            twice_edges += intersection_size(adj_[static_cast<std::size_t>(x)], nv);
        }
        return d * (d - 1) / 2 - static_cast<long>(twice_edges / 2);
    }

    void bucket_insert(int v) {
        const auto s = static_cast<std::size_t>(score_[static_cast<std::size_t>(v)]);
        if (s >= buckets_.size()) {
            buckets_.resize(s + 1);
        }
        auto& b = buckets_[s];
        bucket_pos_[static_cast<std::size_t>(v)] = b.size();
        b.push_back(v);
    }

    void bucket_erase(int v) {
        auto& b = buckets_[static_cast<std::size_t>(score_[static_cast<std::size_t>(v)])];
        const std::size_t pos = bucket_pos_[static_cast<std::size_t>(v)];
        const int last = b.back();
        b[pos] = last;
        bucket_pos_[static_cast<std::size_t>(last)] = pos;
        b.pop_back();
    }

    OrderingScore kind_;
    std::vector<std::vector<int>> adj_;
    std::vector<long> score_;
    std::vector<std::vector<int>> buckets_;
    std::vector<std::size_t> bucket_pos_;
    std::size_t remaining_ = 0;
};

void finish_report(CostReport& report) {
    report.width = report.step_ranks.empty() ? 0 : *std::max_element(report.step_ranks.begin(), report.step_ranks.end());
    report.flops_2c = std::ldexp(1.0, report.width);
    report.memory_bytes = 16.0 * report.flops_2c;
    report.flops_sum = 0.0;
    for (const int r : report.step_ranks) {
        report.flops_sum += std::ldexp(1.0, r + 1);
    }
}

struct Pass {
    ContractionOrder order;
    CostReport cost;
};

Pass run_pass(const LineGraph& lg, OrderingScore kind, std::mt19937_64* rng, double temp) {
    EliminationGraph g(lg, kind);
    Pass pass;
    const auto n = static_cast<std::size_t>(lg.vertex_count());
    pass.order.sequence.reserve(n);
    pass.cost.step_ranks.reserve(n);
    std::vector<double> weights;
    while (g.remaining() > 0) {
        const long s0 = g.min_score();
        int v;
        if (rng == nullptr) {
            v = g.first_in_bucket(s0);
        } else {
            // Weights depend only on the score, so sample a score class first, then a
            // vertex uniformly inside it.
            long chosen = s0;
            if (temp > 0.0) {
                weights.clear();
                double total = 0.0;
                for (long s = s0; s < g.score_limit(); ++s) {
                    const double exponent = -static_cast<double>(s - s0) / temp;
                    if (exponent < -745.0) {
                        break;
                    }
                    const double w = static_cast<double>(g.bucket(s).size()) * std::exp(exponent);
                    weights.push_back(w);
                    total += w;
                }
                double r = std::uniform_real_distribution<double>(0.0, total)(*rng);
                for (std::size_t k = 0; k < weights.size(); ++k) {
                    if (weights[k] == 0.0) {
                        continue;
                    }
                    chosen = s0 + static_cast<long>(k);
                    if (r < weights[k]) {
                        break;
                    }
                    r -= weights[k];
                }
            }
            const auto& b = g.bucket(chosen);
            v = b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(*rng)];
        }
        pass.order.sequence.push_back(v);
        pass.cost.step_ranks.push_back(g.eliminate(v));
    }
    finish_report(pass.cost);
    return pass;
}

bool better(const CostReport& a, const CostReport& b) {
    if (a.width != b.width) {
        return a.width < b.width;
    }
    return a.flops_sum < b.flops_sum;
}

}  // namespace

void check_permutation(const ContractionOrder& order, int vertex_count) {
    if (order.sequence.size() != static_cast<std::size_t>(vertex_count)) {
        throw std::invalid_argument("order has " + std::to_string(order.sequence.size()) + " entries, expected " +
                                    std::to_string(vertex_count));
    }
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    for (const int v : order.sequence) {
        if (v < 0 || v >= vertex_count || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("order is not a permutation (bad or repeated vertex " + std::to_string(v) + ")");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

CostReport contraction_width(const LineGraph& lg, const ContractionOrder& order) {
    check_permutation(order, lg.vertex_count());
    EliminationGraph g(lg, OrderingScore::Degree);
    CostReport report;
    report.step_ranks.reserve(order.sequence.size());
    for (const int v : order.sequence) {
        report.step_ranks.push_back(g.eliminate(v));
    }
    finish_report(report);
    return report;
}

ContractionOrder greedy_order(const LineGraph& lg, OrderingScore score) {
    return run_pass(lg, score, nullptr, 0.0).order;
}

OrderingResult rgreedy_order(const LineGraph& lg, const OrderingParams& params) {
    if (params.n_repeats < 1) {
        throw std::invalid_argument("n_repeats must be at least 1");
    }
    if (!(params.temp >= 0.0)) {
        throw std::invalid_argument("temp must be non-negative");
    }
    Pass best = run_pass(lg, params.score, nullptr, params.temp);
    int best_pass = 0;
    for (int k = 1; k < params.n_repeats; ++k) {
        std::mt19937_64 rng(params.seed + static_cast<std::uint64_t>(k));
        Pass candidate = run_pass(lg, params.score, &rng, params.temp);
        if (better(candidate.cost, best.cost)) {
            best = std::move(candidate);
            best_pass = k;
        }
    }
    return {std::move(best.order), std::move(best.cost), best_pass};
}

int width_budget_for_memory(double bytes) {
    if (!(bytes >= 16.0)) {
        throw std::invalid_argument("memory budget below one complex entry");
    }
    return static_cast<int>(std::floor(std::log2(bytes / 16.0)));
}

}  // namespace qaoatn
