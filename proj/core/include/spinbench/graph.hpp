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
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace spinbench {

using NodeId = std::uint32_t;

/// Simple undirected graph: dense 0-based node ids, no self loops, each
/// edge stored once as (min, max).
class Graph {
  public:
    Graph() = default;
    explicit Graph(NodeId node_count) : node_count_(node_count), adj_(node_count) {}

    NodeId node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Adds {u, v}; returns false if the edge was already present.
    /// Throws on self loops and out-of-range endpoints.
    bool add_edge(NodeId u, NodeId v);

    bool has_edge(NodeId u, NodeId v) const;
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(v); }
    NodeId degree(NodeId v) const { return static_cast<NodeId>(adj_.at(v).size()); }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    /// Connected component label per node (labels are dense, assigned in
    /// node order) plus the component count.
    std::pair<std::vector<NodeId>, NodeId> components() const;

    /// Nodes of the largest connected component, ascending. Ties resolve to
    /// the component containing the smallest node id.
    std::vector<NodeId> largest_component() const;

    /// Subgraph induced on `nodes` (relabeled 0..k-1 in the given order).
    Graph induced_subgraph(const std::vector<NodeId>& nodes) const;

  private:
    NodeId node_count_ = 0;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> adj_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Node -> community assignment; community ids are dense and start at 0.
struct Partition {
    std::vector<NodeId> community;

    NodeId community_count() const;
    /// Remaps community ids onto 0..k-1 in order of first appearance.
    void normalize();
};

struct GraphMetrics {
    NodeId n = 0;
    std::size_t m = 0;
    double avg_degree = 0.0;
    std::vector<std::size_t> degree_distribution;  // index = degree
    double clustering_coefficient = 0.0;
    NodeId diameter = 0;
    NodeId num_components = 0;
    double assortativity = 0.0;
    bool assortativity_defined = false;
};

/// Global transitivity: 3 * triangles / connected triples; 0 when the graph
/// has no triples.
double clustering_coefficient(const Graph& g);

std::size_t triangle_count(const Graph& g);

/// Exact diameter of the largest connected component (BFS from every node
/// of that component). Throws on the empty graph.
NodeId diameter(const Graph& g);

/// Modularity Q of a partition, including the v == w terms of the
/// k_v*k_w/2m correction. Throws when the graph has no edges.
double modularity(const Graph& g, const Partition& p);

GraphMetrics graph_metrics(const Graph& g);

/// Edge-list text format: one "u v" pair per line, '#' comments ignored,
/// optional "nodes N" header (otherwise node_count = 1 + max id).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace spinbench
