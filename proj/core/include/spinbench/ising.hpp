// Copyright 2026 The spinbench developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinbench/graph.hpp"

namespace spinbench {

/// Assignment in {-1,+1}^n.
struct SpinConfig {
    std::vector<std::int8_t> s;

    std::size_t size() const { return s.size(); }
    bool valid() const;
};

/// Spin-reversal transform; entries in {-1,+1}.
struct Gauge {
    std::vector<std::int8_t> signs;
};

struct Coupler {
    NodeId i = 0;  // i < j
    NodeId j = 0;
    double value = 0.0;
};

/// minimize  sum_i h_i s_i + sum_{(i,j)} J_ij s_i s_j + offset  over s in {-1,+1}^n
struct IsingInstance {
    NodeId n = 0;
    std::vector<double> h;
    std::vector<Coupler> couplers;  // unique unordered pairs, i < j
    double offset = 0.0;
    std::string family;
    std::uint64_t seed = 0;
    std::string topology_header;  // e.g. "chimera 2 2"; empty if none
    std::optional<SpinConfig> planted;
    std::optional<double> planted_energy;

    void add_coupler(NodeId i, NodeId j, double value);
    void sort_couplers();
};

/// minimize  sum_i a_i x_i + sum_{(i,j)} b_ij x_i x_j + offset  over x in {0,1}^n
struct QuboInstance {
    NodeId n = 0;
    std::vector<double> a;
    std::vector<Coupler> b;
    double offset = 0.0;
    std::string family;
    std::uint64_t seed = 0;
    std::string topology_header;
};

double energy(const IsingInstance& inst, const SpinConfig& s);
double qubo_value(const QuboInstance& q, const std::vector<std::int8_t>& x);

/// Variable transform s = 1 - 2x; objective values agree on every assignment.
IsingInstance qubo_to_ising(const QuboInstance& q);
QuboInstance ising_to_qubo(const IsingInstance& inst);

/// h'_i = g_i h_i, J'_ij = g_i g_j J_ij; the energy spectrum is unchanged.
IsingInstance apply_gauge(const IsingInstance& inst, const Gauge& g);

Gauge random_gauge(NodeId n, std::uint64_t seed);

/// Flags instances whose coefficients, rescaled to [-1,1], do not fit the
/// 16-step hardware grid {-1, -7/8, ..., +7/8, +1}. Informational only.
bool fits_coupler_grid(const IsingInstance& inst, double step = 0.125, double tol = 1e-9);

/// Per-node coupler adjacency for solvers: (neighbor, J value) lists.
struct CouplerAdjacency {
    std::vector<std::vector<std::pair<NodeId, double>>> at;

    explicit CouplerAdjacency(const IsingInstance& inst);

    /// Energy change of flipping spin i in config s.
    double flip_delta(const IsingInstance& inst, const std::vector<std::int8_t>& s, NodeId i) const {
        double field = inst.h[i];
        for (const auto& [nb, val] : at[i]) field += val * s[nb];
        return -2.0 * s[i] * field;
    }
};

}  // namespace spinbench
