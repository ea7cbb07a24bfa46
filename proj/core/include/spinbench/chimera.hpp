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
#include <vector>

#include "spinbench/graph.hpp"

namespace spinbench {

/// A rows x cols grid of 8-node bipartite cells. Node ids are row-major by
/// cell, left side first:
///   id = 8*(row*cols + col) + side*4 + index,  side 0 = left, 1 = right.
/// Left-side nodes couple vertically between cells, right-side nodes couple
/// horizontally; inside a cell every left node couples to every right node.
struct ChimeraSpec {
    NodeId rows = 1;
    NodeId cols = 1;
    static constexpr NodeId half_cell = 4;
    std::set<NodeId> missing;  // faulty nodes; default none

    NodeId node_count() const { return 8 * rows * cols; }

    NodeId node_id(NodeId row, NodeId col, NodeId side, NodeId index) const {
        return 8 * (row * cols + col) + side * half_cell + index;
    }
    NodeId cell_row(NodeId id) const { return id / 8 / cols; }
    NodeId cell_col(NodeId id) const { return id / 8 % cols; }
    NodeId side(NodeId id) const { return (id % 8) / half_cell; }
    NodeId index(NodeId id) const { return id % half_cell; }

    /// Header form "chimera k_r k_c [missing: id list]".
    std::string to_header() const;
    static ChimeraSpec from_header(const std::string& header);
};

Graph build_chimera(const ChimeraSpec& spec);

struct SubgridPlacement {
    ChimeraSpec spec;              // the k x k block
    std::vector<NodeId> node_map;  // sub node id -> node id in the full graph
};

/// Uniformly selects a feasible anchor cell for a k x k block of `full` and
/// returns the block together with its node injection. Deterministic in seed.
SubgridPlacement random_subgrid(const ChimeraSpec& full, NodeId k, std::uint64_t seed);

/// Chains of host nodes, one per target node.
struct MinorEmbedding {
    std::vector<std::vector<NodeId>> chains;
};

/// True iff chains are pairwise disjoint, each chain induces a connected
/// subgraph of the host, and every target edge has at least one host edge
/// between the two chains. Throws if a chain references a node outside the
/// host.
bool verify_minor_embedding(const Graph& target, const Graph& host, const MinorEmbedding& emb);

struct CompleteGraphEmbedding {
    NodeId capacity = 0;  // largest N with K_N embeddable by this layout
    MinorEmbedding embedding;
};

/// Fixed chain layout embedding K_{4k+1} into a k x k block. The result
/// always passes verify_minor_embedding against build_chimera(spec).
CompleteGraphEmbedding complete_graph_embedding(const ChimeraSpec& spec);

NodeId complete_graph_capacity(const ChimeraSpec& spec);

Graph complete_graph(NodeId n);

}  // namespace spinbench
