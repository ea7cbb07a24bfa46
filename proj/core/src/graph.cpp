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

#include "spinbench/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace spinbench {

namespace {
std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}
}  // namespace

bool Graph::add_edge(NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    if (u >= node_count_ || v >= node_count_) throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (!edge_keys_.insert(edge_key(u, v)).second) return false;
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return true;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v || u >= node_count_ || v >= node_count_) return false;
    return edge_keys_.count(edge_key(u, v)) != 0;
}

std::pair<std::vector<NodeId>, NodeId> Graph::components() const {
    std::vector<NodeId> label(node_count_, UINT32_MAX);
    NodeId next = 0;
    std::deque<NodeId> queue;
    for (NodeId start = 0; start < node_count_; ++start) {
        if (label[start] != UINT32_MAX) continue;
        label[start] = next;
        queue.push_back(start);
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            for (NodeId w : adj_[v]) {
                if (label[w] == UINT32_MAX) {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return {std::move(label), next};
}

std::vector<NodeId> Graph::largest_component() const {
    auto [label, count] = components();
    if (count == 0) return {};
    std::vector<std::size_t> size(count, 0);
    for (NodeId v = 0; v < node_count_; ++v) ++size[label[v]];
    NodeId best = 0;
    for (NodeId c = 1; c < count; ++c)
        if (size[c] > size[best]) best = c;
    std::vector<NodeId> nodes;
    nodes.reserve(size[best]);
    for (NodeId v = 0; v < node_count_; ++v)
        if (label[v] == best) nodes.push_back(v);
    return nodes;
}

Graph Graph::induced_subgraph(const std::vector<NodeId>& nodes) const {
    std::unordered_map<NodeId, NodeId> remap;
    remap.reserve(nodes.size());
    for (NodeId i = 0; i < nodes.size(); ++i) remap[nodes[i]] = i;
    Graph sub(static_cast<NodeId>(nodes.size()));
    for (const auto& [u, v] : edges_) {
        auto iu = remap.find(u);
        auto iv = remap.find(v);
        if (iu != remap.end() && iv != remap.end()) sub.add_edge(iu->second, iv->second);
    }
    return sub;
}

NodeId Partition::community_count() const {
    NodeId max_id = 0;
    for (NodeId c : community) max_id = std::max(max_id, c);
    return community.empty() ? 0 : max_id + 1;
}

void Partition::normalize() {
    std::unordered_map<NodeId, NodeId> remap;
    NodeId next = 0;
    for (NodeId& c : community) {
        auto [it, inserted] = remap.emplace(c, next);
        if (inserted) ++next;
        c = it->second;
    }
}

std::size_t triangle_count(const Graph& g) {
    // orient edges low-degree -> high-degree and intersect forward lists
    const NodeId n = g.node_count();
    auto rank_less = [&](NodeId a, NodeId b) {
        return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
    };
    std::vector<std::vector<NodeId>> fwd(n);
    for (const auto& [u, v] : g.edges()) {
        if (rank_less(u, v))
            fwd[u].push_back(v);
        else
            fwd[v].push_back(u);
    }
    for (auto& list : fwd) std::sort(list.begin(), list.end());
    std::size_t triangles = 0;
    for (const auto& [u, v] : g.edges()) {
        const auto& a = fwd[u];
        const auto& b = fwd[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++triangles;
                ++i;
                ++j;
            } else if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }
    return triangles;
}

double clustering_coefficient(const Graph& g) {
    std::size_t triples = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::size_t d = g.degree(v);
        triples += d * (d - 1) / 2;
    }
    if (triples == 0) return 0.0;
    return 3.0 * static_cast<double>(triangle_count(g)) / static_cast<double>(triples);
}

namespace {
// BFS eccentricity of `start` restricted to its component.
NodeId bfs_eccentricity(const Graph& g, NodeId start, std::vector<NodeId>& dist) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    dist[start] = 0;
    std::deque<NodeId> queue{start};
    NodeId ecc = 0;
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        ecc = std::max(ecc, dist[v]);
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] == UINT32_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return ecc;
}
}  // namespace

NodeId diameter(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    auto nodes = g.largest_component();
    std::vector<NodeId> dist(g.node_count());
    NodeId diam = 0;
    for (NodeId v : nodes) diam = std::max(diam, bfs_eccentricity(g, v, dist));
    return diam;
}

double modularity(const Graph& g, const Partition& p) {
    const std::size_t m = g.edge_count();
    if (m == 0) throw std::invalid_argument("no edges");
    if (p.community.size() != g.node_count())
        throw std::invalid_argument("partition size mismatch");
    const NodeId k = p.community_count();
    std::vector<double> intra2(k, 0.0);   // 2 * edges inside community
    std::vector<double> deg_sum(k, 0.0);  // total degree of community
    for (const auto& [u, v] : g.edges())
        if (p.community[u] == p.community[v]) intra2[p.community[u]] += 2.0;
    for (NodeId v = 0; v < g.node_count(); ++v) deg_sum[p.community[v]] += g.degree(v);
    const double two_m = 2.0 * static_cast<double>(m);
    double q = 0.0;
    for (NodeId c = 0; c < k; ++c) {
        const double frac = deg_sum[c] / two_m;
        q += intra2[c] / two_m - frac * frac;
    }
    return q;
}

GraphMetrics graph_metrics(const Graph& g) {
    GraphMetrics mt;
    mt.n = g.node_count();
    mt.m = g.edge_count();
    mt.avg_degree = mt.n > 0 ? 2.0 * static_cast<double>(mt.m) / mt.n : 0.0;
    NodeId max_deg = 0;
    for (NodeId v = 0; v < mt.n; ++v) max_deg = std::max(max_deg, g.degree(v));
    mt.degree_distribution.assign(max_deg + 1, 0);
    for (NodeId v = 0; v < mt.n; ++v) ++mt.degree_distribution[g.degree(v)];
    mt.clustering_coefficient = clustering_coefficient(g);
    mt.diameter = mt.n > 0 ? diameter(g) : 0;
    mt.num_components = g.components().second;

    // Pearson correlation of endpoint degrees over the 2m ordered edge ends
    if (mt.m > 0) {
        double sx = 0, sxx = 0, sxy = 0;
        for (const auto& [u, v] : g.edges()) {
            const double du = g.degree(u);
            const double dv = g.degree(v);
            sx += du + dv;
            sxx += du * du + dv * dv;
            sxy += 2.0 * du * dv;
        }
        const double count = 2.0 * static_cast<double>(mt.m);
        const double var = sxx / count - (sx / count) * (sx / count);
        if (var > 1e-12) {
            mt.assortativity = (sxy / count - (sx / count) * (sx / count)) / var;
            mt.assortativity_defined = true;
        }
    }
    return mt;
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    long long declared_nodes = -1;
    NodeId max_id = 0;
    bool saw_node = false;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "nodes") {
            if (!(ls >> declared_nodes) || declared_nodes < 0)
                throw std::runtime_error("bad 'nodes' header in edge list");
            continue;
        }
        NodeId u = 0, v = 0;
        try {
            u = static_cast<NodeId>(std::stoul(first));
        } catch (const std::exception&) {
            throw std::runtime_error("bad edge list line: " + line);
        }
        if (!(ls >> v)) throw std::runtime_error("bad edge list line: " + line);
        pairs.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
        saw_node = true;
    }
    const NodeId n = declared_nodes >= 0 ? static_cast<NodeId>(declared_nodes)
                                         : (saw_node ? max_id + 1 : 0);
    Graph g(n);
    for (const auto& [u, v] : pairs) g.add_edge(u, v);
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "nodes " << g.node_count() << "\n";
    auto sorted = g.edges();
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [u, v] : sorted) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_edge_list(out, g);
}

}  // namespace spinbench
