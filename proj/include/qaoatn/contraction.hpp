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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qaoatn/circuit.hpp"
#include "qaoatn/ordering.hpp"
#include "qaoatn/tensor_network.hpp"

namespace qaoatn {

/// Raised when an intermediate tensor would exceed the configured rank cap.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(int rank, int cap)
        : std::runtime_error("intermediate tensor of rank " + std::to_string(rank) + " exceeds rank cap " +
                             std::to_string(cap)),
          rank_(rank),
          cap_(cap) {}

    int rank() const { return rank_; }
    int cap() const { return cap_; }

private:
    int rank_;
    int cap_;
};

inline constexpr int kDefaultRankCap = 30;

struct ContractionResult {
    Complex amplitude;
    int peak_rank = 0;
};

/// Bucket elimination. `order` ranges over line-graph vertex ids, i.e. positions in
/// network.free_variables(). Fails with std::invalid_argument on a non-permutation and
/// with InfeasibleError before allocating an intermediate of rank > rank_cap.
ContractionResult contract(const TensorNetwork& network, const ContractionOrder& order,
                           int rank_cap = kDefaultRankCap);

/// Evaluates the full index sum path by path. Requires at most 24 unfixed variables.
Complex direct_sum(const TensorNetwork& network);

inline constexpr int kMaxDirectSumVariables = 24;
inline constexpr int kMaxStatevectorQubits = 24;

/// Dense state after applying the circuit (phase included) to |0...0>.
/// Qubit 0 is the most significant bit of the basis index.
std::vector<Complex> simulate_statevector(const Circuit& circuit);

/// <bits| circuit |0...0>, with bits[q] the value of qubit q.
Complex statevector_amplitude(const Circuit& circuit, std::string_view bits);

}  // namespace qaoatn
