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
#include <functional>
#include <string>
#include <vector>

#include "spinbench/graph.hpp"
#include "spinbench/ising.hpp"
#include "spinbench/solvers.hpp"

namespace spinbench {

/// Dense Ising encoding of the modularity-maximizing bipartition of a node
/// subset: minimizing `instance` equals maximizing Q over two-colorings,
/// with Q = -energy. Couplers exist for every node pair.
struct BipartitionProblem {
    std::vector<NodeId> nodes;  // subset of the parent graph, ascending
    IsingInstance instance;     // index i corresponds to nodes[i]
};

/// Builds the bipartition instance from the subgraph induced on `nodes`
/// (its own adjacency, degrees and edge count). Throws "trivial subproblem"
/// when that subgraph has no edges.
BipartitionProblem bipartition_ising(const Graph& g, const std::vector<NodeId>& nodes);

/// Black-box Ising solver: instance, RNG seed, step budget.
using IsingSolverFn =
    std::function<SolveResult(const IsingInstance&, std::uint64_t seed, std::uint64_t budget)>;

/// Step budget per sub-problem as a function of its node count.
using BudgetPolicy = std::function<std::uint64_t(NodeId)>;

/// Default ~n^1.15, matching the run-time calibration of the hybrid.
BudgetPolicy default_budget_policy();

struct SplitTrace {
    NodeId community_size = 0;
    double delta_q = 0.0;
    bool accepted = false;
};

struct CommunityResult {
    Partition partition;
    double q = 0.0;
    std::uint64_t total_solver_steps = 0;
    std::vector<SplitTrace> trace;
};

/// Hybrid recursive bipartitioning: repeatedly encodes a community as a
/// bipartition instance, solves it with the supplied solver, and accepts the
/// split only when global modularity strictly increases. Communities are
/// processed largest first; deterministic given `seed`.
CommunityResult recursive_bipartition(const Graph& g, const IsingSolverFn& solver,
                                      const BudgetPolicy& budget, std::uint64_t seed);

/// Classical two-phase baseline: greedy local moves to the best-gain
/// neighbor community until no gain, then community contraction, repeated
/// until stable. Node visit order is shuffled by `seed`. When `warm_start`
/// is given, the first level begins from that partition instead of
/// singletons.
CommunityResult greedy_local_move(const Graph& g, std::uint64_t seed,
                                  const Partition* warm_start = nullptr);

/// Smallest community edge count that modularity maximization can resolve.
double resolution_limit_bound(std::size_t m);

/// Text form "node_id community_id" per line.
void write_partition_file(const std::string& path, const Partition& p);
Partition read_partition_file(const std::string& path);
void write_trace_file(const std::string& path, const std::vector<SplitTrace>& trace);

}  // namespace spinbench
