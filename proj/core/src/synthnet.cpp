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

#include "spinbench/synthnet.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spinbench/rng.hpp"

namespace spinbench {

namespace {
class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), NodeId{0});
    }
    NodeId find(NodeId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool merge(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

  private:
    std::vector<NodeId> parent_;
};

template <typename T>
void shuffle_in_place(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[rng.next_below(i)]);
}
}  // namespace

ChimeraMinor generate_chimera_minor(const ChimeraSpec& spec, const MinorGenParams& params) {
    for (double p : {params.p1, params.p2, params.p3})
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("probabilities must be in [0,1]");
    const Graph host = build_chimera(spec);
    Rng rng(params.seed);
    UnionFind uf(host.node_count());

    // phase 1: merge left/right pairs inside each cell
    for (NodeId r = 0; r < spec.rows; ++r)
        for (NodeId c = 0; c < spec.cols; ++c)
            for (NodeId i = 0; i < ChimeraSpec::half_cell; ++i)
                if (rng.next_double() < params.p1)
                    uf.merge(spec.node_id(r, c, 0, i), spec.node_id(r, c, 1, i));

    // phase 2: merge across surviving inter-cell edges, several mild rounds
    std::vector<std::pair<NodeId, NodeId>> inter;
    for (const auto& [u, v] : host.edges())
        if (spec.cell_row(u) != spec.cell_row(v) || spec.cell_col(u) != spec.cell_col(v))
            inter.emplace_back(u, v);
    for (int iter = 0; iter < params.p2_iters; ++iter) {
        shuffle_in_place(inter, rng);
        for (const auto& [u, v] : inter)
            if (uf.find(u) != uf.find(v) && rng.next_double() < params.p2) uf.merge(u, v);
    }

    // quotient graph on the merged classes
    std::map<NodeId, NodeId> root_to_minor;  // ordered: minor ids follow host order
    for (NodeId v = 0; v < host.node_count(); ++v) root_to_minor.emplace(uf.find(v), 0);
    NodeId next = 0;
    for (auto& [root, id] : root_to_minor) id = next++;
    const NodeId minor_n = next;

    std::set<std::pair<NodeId, NodeId>> quotient_edges;
    for (const auto& [u, v] : host.edges()) {
        NodeId a = root_to_minor[uf.find(u)];
        NodeId b = root_to_minor[uf.find(v)];
        if (a == b) continue;  // merged pairs collapse, self loops vanish
        if (a > b) std::swap(a, b);
        quotient_edges.insert({a, b});
    }

    // phase 3: thin edges while preserving reachability of their endpoints
    std::vector<std::pair<NodeId, NodeId>> order(quotient_edges.begin(), quotient_edges.end());
    shuffle_in_place(order, rng);
    std::vector<std::set<NodeId>> adj(minor_n);
    for (const auto& [a, b] : quotient_edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    auto reachable = [&](NodeId from, NodeId to) {
        std::vector<char> seen(minor_n, 0);
        std::deque<NodeId> queue{from};
        seen[from] = 1;
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            if (v == to) return true;
            for (NodeId w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        return false;
    };
    for (const auto& [a, b] : order) {
        if (rng.next_double() >= params.p3) continue;
        adj[a].erase(b);
        adj[b].erase(a);
        if (!reachable(a, b)) {  // would split them apart: put it back
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }

    ChimeraMinor out;
    out.graph = Graph(minor_n);
    for (NodeId a = 0; a < minor_n; ++a)
        for (NodeId b : adj[a])
            if (a < b) out.graph.add_edge(a, b);
    out.embedding.chains.resize(minor_n);
    for (NodeId v = 0; v < host.node_count(); ++v)
        out.embedding.chains[root_to_minor[uf.find(v)]].push_back(v);
    return out;
}

double utilization(const MinorEmbedding& emb, const ChimeraSpec& spec) {
    return static_cast<double>(emb.chains.size()) / static_cast<double>(spec.node_count());
}

Graph gen_erdos_renyi(NodeId n, double p, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g.induced_subgraph(g.largest_component());
}

void write_chain_file(const std::string& path, const MinorEmbedding& emb) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (std::size_t t = 0; t < emb.chains.size(); ++t) {
        out << t << ":";
        for (NodeId v : emb.chains[t]) out << " " << v;
        out << "\n";
    }
}

MinorEmbedding read_chain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    MinorEmbedding emb;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad chain line: " + line);
        const auto t = static_cast<std::size_t>(std::stoul(line.substr(0, colon)));
        if (emb.chains.size() <= t) emb.chains.resize(t + 1);
        std::istringstream rest(line.substr(colon + 1));
        NodeId v;
        while (rest >> v) emb.chains[t].push_back(v);
    }
    return emb;
}

}  // namespace spinbench
