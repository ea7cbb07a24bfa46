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
#include <set>
#include <string>

#include "spinbench/chimera.hpp"
#include "spinbench/graph.hpp"
#include "spinbench/ising.hpp"

namespace spinbench {

/// Couplers uniform over {-1,+1} on the topology edges, no linear term.
IsingInstance gen_random_ising(const Graph& topology, std::uint64_t seed);

/// Quadratic terms uniform over {-1,+1} on the topology edges, no linear
/// term. Converting the result to Ising gives +-1/4 couplers with nonzero
/// fields, a different distribution from gen_random_ising.
QuboInstance gen_random_qubo(const Graph& topology, std::uint64_t seed);

/// Independent-set encoding: each edge keeps J = 1 with probability 1/2
/// (dropped otherwise), h_i = (sum of incident J) - 2. Ground states decode
/// to maximum independent sets of the kept subgraph.
IsingInstance gen_mis(const Graph& topology, std::uint64_t seed);

/// Affinity variant: J uniform over {-1,+1}, h_i = (sum of incident J) - 2.
IsingInstance gen_mais(const Graph& topology, std::uint64_t seed);

/// Nodes assigned +1 by the config; only defined for mis/mais instances.
std::set<NodeId> decode_independent_set(const IsingInstance& inst, const SpinConfig& s);

enum class LoopPolicy { Any, Short4, LongOver8 };

LoopPolicy loop_policy_from_string(const std::string& name);
std::string to_string(LoopPolicy policy);

/// Plants a uniform random configuration and builds ceil(C*n) frustrated
/// loops around it by random walks on the Chimera edges; each loop satisfies
/// the planted spins except exactly one edge, and shared edges accumulate
/// additively. The planted energy sum(2 - len_l) is recorded and is the
/// exact minimum of the instance.
IsingInstance gen_planted(const ChimeraSpec& spec, double cycle_density, LoopPolicy policy,
                          std::uint64_t seed);

}  // namespace spinbench
