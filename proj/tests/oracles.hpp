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

// Test-only reference computations. Nothing here calls into the code paths it checks:
// gate matrices are written out by hand and circuits are evaluated with Kronecker
// products of full 2^N x 2^N operators.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "qaoatn/circuit.hpp"
#include "qaoatn/ordering.hpp"
#include "qaoatn/tensor_network.hpp"

namespace qaoatn::oracle {

using Dense = std::vector<std::vector<Complex>>;

inline Dense identity(std::size_t dim) {
    Dense m(dim, std::vector<Complex>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Dense matmul(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b.front().size();
    Dense c(n, std::vector<Complex>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                c[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return c;
}

inline Dense kron(const Dense& a, const Dense& b) {
    const std::size_t ra = a.size(), ca = a.front().size();
    const std::size_t rb = b.size(), cb = b.front().size();
    Dense c(ra * rb, std::vector<Complex>(ca * cb, 0.0));
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < ca; ++j) {
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < cb; ++l) {
                    c[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return c;
}

/// Hand-written matrices in the library's conventions.
inline Dense reference_matrix(const Gate& g) {
    const double s = 1.0 / std::sqrt(2.0);
    const auto e = [](double angle) { return std::polar(1.0, angle); };
    switch (g.kind) {
        case GateKind::H: return {{s, s}, {s, -s}};
        case GateKind::ZPow: return {{1.0, 0.0}, {0.0, e(-g.param)}};
        case GateKind::XPow: {
            const Dense h = {{s, s}, {s, -s}};
            return matmul(h, matmul(Dense{{1.0, 0.0}, {0.0, e(-g.param)}}, h));
        }
        case GateKind::CNOT: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
        case GateKind::ZZ:
            return {{e(g.param), 0, 0, 0}, {0, e(-g.param), 0, 0}, {0, 0, e(-g.param), 0}, {0, 0, 0, e(g.param)}};
    }
    return {};
}

inline Dense swap_matrix() { return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}; }

/// Full 2^N operator of one gate; qubit 0 is the most significant bit. Two-qubit gates on
/// non-adjacent or reversed wires are conjugated by SWAP chains into position.
inline Dense embed(const Gate& g, int n) {
    const Dense m = reference_matrix(g);
    if (g.arity() == 1) {
        const int q = g.qubits[0];
        return kron(kron(identity(std::size_t{1} << q), m), identity(std::size_t{1} << (n - 1 - q)));
    }
    // Move qubits[0] to position 0 and qubits[1] to position 1 with adjacent swaps.
    std::vector<int> where(static_cast<std::size_t>(n));
    std::iota(where.begin(), where.end(), 0);  // where[logical] = position
    Dense perm = identity(std::size_t{1} << n);
    auto adjacent_swap = [&](int pos) {
        const Dense s = kron(kron(identity(std::size_t{1} << pos), swap_matrix()),
                             identity(std::size_t{1} << (n - 2 - pos)));
        perm = matmul(s, perm);
        for (int& w : where) {
            if (w == pos) {
                w = pos + 1;
            } else if (w == pos + 1) {
                w = pos;
            }
        }
    };
    for (int target_pos = 0; target_pos < 2; ++target_pos) {
        const int logical = g.qubits[static_cast<std::size_t>(target_pos)];
        while (where[static_cast<std::size_t>(logical)] > target_pos) {
            adjacent_swap(where[static_cast<std::size_t>(logical)] - 1);
        }
    }
    const Dense local = kron(m, identity(std::size_t{1} << (n - 2)));
    // perm is real orthogonal: its inverse is its transpose.
    Dense perm_t = perm;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = 0; j < perm.size(); ++j) {
            perm_t[i][j] = perm[j][i];
        }
    }
    return matmul(perm_t, matmul(local, perm));
}

/// Full unitary of the circuit, phase included.
inline Dense circuit_unitary(const Circuit& c) {
    Dense u = identity(std::size_t{1} << c.qubit_count());
    for (const Gate& g : c.gates()) {
        u = matmul(embed(g, c.qubit_count()), u);
    }
    for (auto& row : u) {
        for (Complex& z : row) {
            z *= c.phase();
        }
    }
    return u;
}

/// Column 0 of the circuit unitary, i.e. the state produced from |0...0>.
inline std::vector<Complex> dense_state(const Circuit& c) {
    const Dense u = circuit_unitary(c);
    std::vector<Complex> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i][0];
    }
    return out;
}

/// Elimination width by brute force over every vertex order, recomputing neighborhoods
/// with an adjacency matrix. Intended for at most 8 vertices.
inline int exhaustive_min_width(const LineGraph& lg) {
    const int n = lg.vertex_count();
    if (n == 0) {
        return 0;
    }
    std::vector<std::vector<bool>> base(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) {
        for (const int u : lg.adjacency()[static_cast<std::size_t>(v)]) {
            base[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = std::numeric_limits<int>::max();
    do {
        auto adj = base;
        std::vector<bool> gone(static_cast<std::size_t>(n), false);
        int width = 0;
        for (const int v : order) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u) {
                if (!gone[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                    nb.push_back(u);
                }
            }
            width = std::max(width, static_cast<int>(nb.size()));
            for (const int a : nb) {
                for (const int b : nb) {
                    if (a != b) {
                        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                    }
                }
            }
            gone[static_cast<std::size_t>(v)] = true;
            if (width >= best) {
                break;
            }
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Minimum elimination width by dynamic programming over eliminated sets. The rank
/// produced by eliminating v after set S is the number of vertices outside S + {v}
/// reachable from v through S. Feasible up to about 16 vertices.
inline int subset_dp_min_width(const LineGraph& lg) {
    const int n = lg.vertex_count();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (const int u : lg.adjacency()[static_cast<std::size_t>(v)]) {
            nbr[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        }
    }
    auto rank_after = [&](std::uint32_t set, int v) {
        std::uint32_t seen = std::uint32_t{1} << v;
        std::uint32_t frontier = seen;
        std::uint32_t outside = 0;
        while (frontier != 0) {
            std::uint32_t next = 0;
            for (int u = 0; u < n; ++u) {
                if (frontier & (std::uint32_t{1} << u)) {
                    next |= nbr[static_cast<std::size_t>(u)];
                }
            }
            next &= ~seen;
            seen |= next;
            outside |= next & ~set;
            frontier = next & set;
        }
        return std::popcount(outside);
    };
    std::vector<int> best(std::size_t{full} + 1, std::numeric_limits<int>::max());
    best[0] = 0;
    for (std::uint32_t set = 1; set <= full; ++set) {
        for (int v = 0; v < n; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            if (set & bit) {
                const std::uint32_t rest = set & ~bit;
                const int w = std::max(best[rest], rank_after(rest, v));
                best[set] = std::min(best[set], w);
            }
        }
    }
    return best[full];
}

/// Random circuit over {H, ZPow, CNOT} with n qubits and the given gate count.
inline Circuit random_hzc_circuit(int n, int gates, std::mt19937_64& rng) {
    Circuit c(n);
    std::uniform_int_distribution<int> kind(0, n > 1 ? 2 : 1);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int i = 0; i < gates; ++i) {
        switch (kind(rng)) {
            case 0: c.append(Gate::h(qubit(rng))); break;
            case 1: c.append(Gate::zpow(qubit(rng), angle(rng))); break;
            default: {
                const int a = qubit(rng);
                int b = qubit(rng);
                while (b == a) {
                    b = qubit(rng);
                }
                c.append(Gate::cnot(a, b));
            }
        }
    }
    return c;
}

/// Random circuit that also plants CNOT-ZPow-CNOT and H-ZPow-H blocks so fusion has work.
inline Circuit random_fusable_circuit(int n, int blocks, std::mt19937_64& rng) {
    Circuit c(n);
    std::uniform_int_distribution<int> choice(0, n > 1 ? 3 : 1);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int i = 0; i < blocks; ++i) {
        const int q = qubit(rng);
        switch (choice(rng)) {
            case 0: c.append(Gate::h(q)); break;
            case 1: {
                const double t = angle(rng);
                c.append(Gate::h(q));
                c.append(Gate::zpow(q, t));
                c.append(Gate::h(q));
                break;
            }
            case 2: {
                int t = qubit(rng);
                while (t == q) {
                    t = qubit(rng);
                }
                c.append(Gate::cnot(q, t));
                c.append(Gate::zpow(t, angle(rng)));
                c.append(Gate::cnot(q, t));
                break;
            }
            default: {
                int t = qubit(rng);
                while (t == q) {
                    t = qubit(rng);
                }
                c.append(Gate::cnot(q, t));
            }
        }
    }
    return c;
}

/// Erdos-Renyi line graph with `n` vertices, each pair joined with probability `prob`.
inline LineGraph random_line_graph(int n, double prob, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(prob);
    std::vector<std::vector<int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.push_back({u, v});
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        edges.push_back({v});
    }
    return LineGraph(n, std::move(edges));
}

}  // namespace qaoatn::oracle
