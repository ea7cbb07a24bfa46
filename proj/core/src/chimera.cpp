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

#include "spinbench/chimera.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "spinbench/rng.hpp"

namespace spinbench {

std::string ChimeraSpec::to_header() const {
    std::ostringstream out;
    out << "chimera " << rows << " " << cols;
    if (!missing.empty()) {
        out << " missing:";
        for (NodeId id : missing) out << " " << id;
    }
    return out.str();
}

ChimeraSpec ChimeraSpec::from_header(const std::string& header) {
    std::istringstream in(header);
    std::string tag;
    ChimeraSpec spec;
    if (!(in >> tag >> spec.rows >> spec.cols) || tag != "chimera" || spec.rows == 0 ||
        spec.cols == 0)
        throw std::runtime_error("bad chimera header: " + header);
    std::string word;
    if (in >> word) {
        if (word != "missing:") throw std::runtime_error("bad chimera header: " + header);
        NodeId id;
        while (in >> id) spec.missing.insert(id);
    }
    return spec;
}

Graph build_chimera(const ChimeraSpec& spec) {
    if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("chimera grid must be >= 1x1");
    Graph g(spec.node_count());
    auto alive = [&](NodeId id) { return spec.missing.count(id) == 0; };
    for (NodeId r = 0; r < spec.rows; ++r) {
        for (NodeId c = 0; c < spec.cols; ++c) {
            for (NodeId i = 0; i < ChimeraSpec::half_cell; ++i) {
                const NodeId left = spec.node_id(r, c, 0, i);
                // complete bipartite cell
                for (NodeId j = 0; j < ChimeraSpec::half_cell; ++j) {
                    const NodeId right = spec.node_id(r, c, 1, j);
                    if (alive(left) && alive(right)) g.add_edge(left, right);
                }
                // left side couples vertically
                if (r + 1 < spec.rows) {
                    const NodeId below = spec.node_id(r + 1, c, 0, i);
                    if (alive(left) && alive(below)) g.add_edge(left, below);
                }
                // right side couples horizontally
                if (c + 1 < spec.cols) {
                    const NodeId right = spec.node_id(r, c, 1, i);
                    const NodeId next = spec.node_id(r, c + 1, 1, i);
                    if (alive(right) && alive(next)) g.add_edge(right, next);
                }
            }
        }
    }
    return g;
}

SubgridPlacement random_subgrid(const ChimeraSpec& full, NodeId k, std::uint64_t seed) {
    if (k == 0 || k > full.rows || k > full.cols)
        throw std::invalid_argument("subgrid size out of range");
    const NodeId anchor_rows = full.rows - k + 1;
    const NodeId anchor_cols = full.cols - k + 1;
    Rng rng(seed);
    const auto pick = rng.next_below(static_cast<std::uint64_t>(anchor_rows) * anchor_cols);
    const NodeId r0 = static_cast<NodeId>(pick / anchor_cols);
    const NodeId c0 = static_cast<NodeId>(pick % anchor_cols);

    SubgridPlacement placement;
    placement.spec = ChimeraSpec{k, k, {}};
    placement.node_map.resize(placement.spec.node_count());
    for (NodeId r = 0; r < k; ++r)
        for (NodeId c = 0; c < k; ++c)
            for (NodeId s = 0; s < 2; ++s)
                for (NodeId i = 0; i < ChimeraSpec::half_cell; ++i)
                    placement.node_map[placement.spec.node_id(r, c, s, i)] =
                        full.node_id(r0 + r, c0 + c, s, i);
    return placement;
}

bool verify_minor_embedding(const Graph& target, const Graph& host, const MinorEmbedding& emb) {
    if (emb.chains.size() < target.node_count()) return false;
    std::unordered_set<NodeId> used;
    for (NodeId t = 0; t < target.node_count(); ++t) {
        const auto& chain = emb.chains[t];
        if (chain.empty()) return false;
        for (NodeId v : chain) {
            if (v >= host.node_count()) throw std::out_of_range("chain references non-existent host node");
            if (!used.insert(v).second) return false;  // chains overlap
        }
    }
    // each chain must induce a connected host subgraph
    for (NodeId t = 0; t < target.node_count(); ++t) {
        const auto& chain = emb.chains[t];
        std::unordered_set<NodeId> members(chain.begin(), chain.end());
        std::unordered_set<NodeId> seen{chain.front()};
        std::deque<NodeId> queue{chain.front()};
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            for (NodeId w : host.neighbors(v)) {
                if (members.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        if (seen.size() != members.size()) return false;
    }
    // every target edge needs a host edge between the two chains
    for (const auto& [a, b] : target.edges()) {
        bool covered = false;
        for (NodeId u : emb.chains[a]) {
            for (NodeId v : emb.chains[b]) {
                if (host.has_edge(u, v)) {
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        if (!covered) return false;
    }
    return true;
}

CompleteGraphEmbedding complete_graph_embedding(const ChimeraSpec& spec) {
    if (spec.rows != spec.cols) throw std::invalid_argument("square spec required");
    const NodeId k = spec.rows;
    CompleteGraphEmbedding out;
    out.capacity = 4 * k + 1;
    auto& chains = out.embedding.chains;
    chains.assign(out.capacity, {});

    if (k == 1) {
        // inside one cell: merge three left/right pairs, keep the fourth
        // pair as two singleton chains
        for (NodeId b = 0; b < 3; ++b)
            chains[b] = {spec.node_id(0, 0, 0, b), spec.node_id(0, 0, 1, b)};
        chains[3] = {spec.node_id(0, 0, 0, 3)};
        chains[4] = {spec.node_id(0, 0, 1, 3)};
        return out;
    }

    // Logical node (band a, index b): an L-shaped chain running down left
    // column a through rows 0..a, then right along row a through columns
    // a..k-1. Any two L-chains meet in the cell where the column of one
    // crosses the row of the other.
    for (NodeId a = 0; a < k; ++a) {
        for (NodeId b = 0; b < ChimeraSpec::half_cell; ++b) {
            auto& chain = chains[4 * a + b];
            for (NodeId r = 0; r <= a; ++r) chain.push_back(spec.node_id(r, a, 0, b));
            for (NodeId c = a; c < k; ++c) chain.push_back(spec.node_id(a, c, 1, b));
        }
    }
    // The remaining logical node takes every below-diagonal cell. That
    // staircase region is connected and touches band a through the cell
    // directly under (a, a).
    auto& last = chains[4 * k];
    for (NodeId r = 0; r < k; ++r)
        for (NodeId c = 0; c < r; ++c)
            for (NodeId s = 0; s < 2; ++s)
                for (NodeId i = 0; i < ChimeraSpec::half_cell; ++i)
                    last.push_back(spec.node_id(r, c, s, i));
    return out;
}

NodeId complete_graph_capacity(const ChimeraSpec& spec) {
    return complete_graph_embedding(spec).capacity;
}

Graph complete_graph(NodeId n) {
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace spinbench
