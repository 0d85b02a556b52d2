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

#include "qaoatn/contraction.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace qaoatn {

namespace {

struct BitMap {
    int from;  // bit position in the bucket index
    int to;    // bit position in the tensor index
};

}  // namespace

ContractionResult contract(const TensorNetwork& network, const ContractionOrder& order, int rank_cap) {
    network.validate();
    TensorNetwork net = network.sliced();
    const std::vector<Variable> free = net.free_variables();
    check_permutation(order, static_cast<int>(free.size()));

    std::vector<Tensor> pool = std::move(net.tensors);
    std::vector<bool> alive(pool.size(), true);
    std::vector<std::vector<std::size_t>> holders(static_cast<std::size_t>(net.variable_count));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (const Variable v : pool[i].variables) {
            holders[static_cast<std::size_t>(v)].push_back(i);
        }
    }
    int next_id = 0;
    for (const Tensor& t : pool) {
        next_id = std::max(next_id, t.id + 1);
    }

    ContractionResult result;
    std::vector<std::size_t> bucket;
    for (const int vertex : order.sequence) {
        const Variable var = free[static_cast<std::size_t>(vertex)];
        bucket.clear();
        for (const std::size_t i : holders[static_cast<std::size_t>(var)]) {
            if (alive[i]) {
                bucket.push_back(i);
            }
        }
        std::sort(bucket.begin(), bucket.end(),
                  [&pool](std::size_t a, std::size_t b) { return pool[a].id < pool[b].id; });

        // Result variables in order of first appearance; the summed variable is bit 0.
        std::vector<Variable> out_vars;
        for (const std::size_t i : bucket) {
            for (const Variable v : pool[i].variables) {
                if (v != var && std::find(out_vars.begin(), out_vars.end(), v) == out_vars.end()) {
                    out_vars.push_back(v);
                }
            }
        }
        const int out_rank = static_cast<int>(out_vars.size());
        if (out_rank > rank_cap) {
            throw InfeasibleError(out_rank, rank_cap);
        }
        result.peak_rank = std::max(result.peak_rank, out_rank);

        auto bucket_bit = [&](Variable v) {
            if (v == var) {
                return 0;
            }
            const auto pos = std::find(out_vars.begin(), out_vars.end(), v) - out_vars.begin();
            return out_rank - static_cast<int>(pos);
        };
        std::vector<std::vector<BitMap>> maps(bucket.size());
        for (std::size_t k = 0; k < bucket.size(); ++k) {
            const Tensor& t = pool[bucket[k]];
            const int r = static_cast<int>(t.rank());
            for (int a = 0; a < r; ++a) {
                maps[k].push_back({bucket_bit(t.variables[static_cast<std::size_t>(a)]), r - 1 - a});
            }
        }

        Tensor produced;
        produced.id = next_id++;
        produced.variables = out_vars;
        produced.data.assign(std::size_t{1} << out_rank, Complex{0.0, 0.0});
        const std::uint64_t full = std::uint64_t{1} << (out_rank + 1);
        for (std::uint64_t idx = 0; idx < full; ++idx) {
            Complex value{1.0, 0.0};
            for (std::size_t k = 0; k < bucket.size(); ++k) {
                std::size_t t_idx = 0;
                for (const BitMap& m : maps[k]) {
                    t_idx |= static_cast<std::size_t>((idx >> m.from) & 1U) << m.to;
                }
                value *= pool[bucket[k]].data[t_idx];
            }
            if (bucket.empty()) {
                value = 1.0;
            }
            produced.data[static_cast<std::size_t>(idx >> 1)] += value;
        }

        for (const std::size_t i : bucket) {
            alive[i] = false;
        }
        const std::size_t new_index = pool.size();
        for (const Variable v : produced.variables) {
            holders[static_cast<std::size_t>(v)].push_back(new_index);
        }
        pool.push_back(std::move(produced));
        alive.push_back(true);
    }

    Complex amplitude{1.0, 0.0};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (alive[i]) {
            amplitude *= pool[i].data.front();
        }
    }
    result.amplitude = amplitude;
    return result;
}

Complex direct_sum(const TensorNetwork& network) {
    network.validate();
    const TensorNetwork net = network.sliced();
    const std::vector<Variable> free = net.free_variables();
    const int q = static_cast<int>(free.size());
    if (q > kMaxDirectSumVariables) {
        throw std::invalid_argument("direct_sum supports at most " + std::to_string(kMaxDirectSumVariables) +
                                    " unfixed variables, network has " + std::to_string(q));
    }
    std::vector<int> depth_of(static_cast<std::size_t>(net.variable_count), -1);
    for (int d = 0; d < q; ++d) {
        depth_of[static_cast<std::size_t>(free[static_cast<std::size_t>(d)])] = d;
    }

    // Each tensor is evaluated once all of its variables have been assigned.
    Complex prefactor{1.0, 0.0};
    std::vector<std::vector<const Tensor*>> completes_at(static_cast<std::size_t>(q));
    for (const Tensor& t : net.tensors) {
        int depth = -1;
        for (const Variable v : t.variables) {
            depth = std::max(depth, depth_of[static_cast<std::size_t>(v)]);
        }
        if (depth < 0) {
            prefactor *= t.data.front();
        } else {
            completes_at[static_cast<std::size_t>(depth)].push_back(&t);
        }
    }

    std::vector<int> assignment(static_cast<std::size_t>(net.variable_count), 0);
    std::function<Complex(int, Complex)> visit = [&](int depth, Complex partial) -> Complex {
        if (depth == q) {
            return partial;
        }
        Complex sum{0.0, 0.0};
        const auto var = static_cast<std::size_t>(free[static_cast<std::size_t>(depth)]);
        for (int bit = 0; bit < 2; ++bit) {
            assignment[var] = bit;
            Complex value = partial;
            for (const Tensor* t : completes_at[static_cast<std::size_t>(depth)]) {
                std::size_t idx = 0;
                for (const Variable v : t->variables) {
                    idx = (idx << 1) | static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)]);
                }
                value *= t->data[idx];
            }
            // A zero factor kills every path below this prefix.
            if (value != Complex{0.0, 0.0}) {
                sum += visit(depth + 1, value);
            }
        }
        return sum;
    };
    return q == 0 ? prefactor : visit(0, prefactor);
}

std::vector<Complex> simulate_statevector(const Circuit& circuit) {
    const int n = circuit.qubit_count();
    if (n > kMaxStatevectorQubits) {
        throw std::invalid_argument("state-vector simulation supports at most " +
                                    std::to_string(kMaxStatevectorQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> state(dim, Complex{0.0, 0.0});
    state[0] = 1.0;
    auto bit_of = [n](int q) { return std::size_t{1} << (n - 1 - q); };

    for (const Gate& gate : circuit.gates()) {
        const GateMatrix m = gate_matrix(gate);
        if (gate.arity() == 1) {
            const std::size_t mask = bit_of(gate.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & mask) {
                    continue;
                }
                const Complex a0 = state[i];
                const Complex a1 = state[i | mask];
                state[i] = m(0, 0) * a0 + m(0, 1) * a1;
                state[i | mask] = m(1, 0) * a0 + m(1, 1) * a1;
            }
        } else {
            const std::size_t hi = bit_of(gate.qubits[0]);
            const std::size_t lo = bit_of(gate.qubits[1]);
            const std::size_t offsets[4] = {0, lo, hi, hi | lo};
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & (hi | lo)) {
                    continue;
                }
                Complex in[4];
                for (int k = 0; k < 4; ++k) {
                    in[k] = state[i | offsets[k]];
                }
                for (int r = 0; r < 4; ++r) {
                    Complex acc{0.0, 0.0};
                    for (int c = 0; c < 4; ++c) {
                        acc += m(r, c) * in[c];
                    }
                    state[i | offsets[r]] = acc;
                }
            }
        }
    }
    for (Complex& a : state) {
        a *= circuit.phase();
    }
    return state;
}

Complex statevector_amplitude(const Circuit& circuit, std::string_view bits) {
    const int n = circuit.qubit_count();
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("bitstring has length " + std::to_string(bits.size()) + ", circuit has " +
                                    std::to_string(n) + " qubits");
    }
    if (n > kMaxStatevectorQubits) {
        throw std::invalid_argument("state-vector simulation supports at most " +
                                    std::to_string(kMaxStatevectorQubits) + " qubits");
    }
    std::size_t index = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return simulate_statevector(circuit)[index];
}

}  // namespace qaoatn
