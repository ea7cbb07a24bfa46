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
#include <string>

#include "spinbench/chimera.hpp"
#include "spinbench/graph.hpp"

namespace spinbench {

/// Probabilities of the three minor-generation phases. The defaults are
/// calibrated against the acceptance targets (mean utilization >= 0.55 on an
/// 8x8 host, clustering in the real-world 0.05..0.2 band), not taken from
/// any published table.
struct MinorGenParams {
    double p1 = 0.40;   // intra-cell pair merge
    double p2 = 0.10;   // inter-cell merge, per iteration
    int p2_iters = 2;
    double p3 = 0.30;   // edge removal
    std::uint64_t seed = 0;
};

struct ChimeraMinor {
    Graph graph;
    MinorEmbedding embedding;  // minor node -> original Chimera nodes
};

/// Three-phase minor generator on a Chimera host:
///   1. merge each of the four left/right pairs of every cell with p1,
///   2. for p2_iters rounds, merge surviving inter-cell edges with p2
///      (scan order reshuffled every round),
///   3. remove each edge with p3, reinserting it when the removal would
///      disconnect its endpoints.
/// The returned chain map always passes verify_minor_embedding.
ChimeraMinor generate_chimera_minor(const ChimeraSpec& spec, const MinorGenParams& params);

/// Fraction of host nodes retained as minor nodes.
double utilization(const MinorEmbedding& emb, const ChimeraSpec& spec);

/// G(n, p) restricted to its largest connected component.
Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed);

/// Sidecar chain format: one "minor_node: host ids..." line per chain.
void write_chain_file(const std::string& path, const MinorEmbedding& emb);
MinorEmbedding read_chain_file(const std::string& path);

}  // namespace spinbench
