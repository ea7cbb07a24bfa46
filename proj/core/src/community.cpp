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

#include "spinbench/community.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "spinbench/rng.hpp"

namespace spinbench {

BipartitionProblem bipartition_ising(const Graph& g, const std::vector<NodeId>& nodes) {
    BipartitionProblem prob;
    prob.nodes = nodes;
    std::sort(prob.nodes.begin(), prob.nodes.end());
    const Graph sub = g.induced_subgraph(prob.nodes);
    const std::size_t m = sub.edge_count();
    if (m == 0) throw std::invalid_argument("trivial subproblem");
    const auto n = sub.node_count();
    const double two_m = 2.0 * static_cast<double>(m);

    IsingInstance& inst = prob.instance;
    inst.n = n;
    inst.h.assign(n, 0.0);
    inst.family = "modularity-bipartition";
    // coupler(v,w) = -(1/2m) [A_vw - k_v k_w / 2m]; the v == w diagonal terms
    // are constant and land in the offset, so Q = -energy holds exactly
    double diag = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const double kv = sub.degree(v);
        diag += kv * kv;
        for (NodeId w = v + 1; w < n; ++w) {
            const double a = sub.has_edge(v, w) ? 1.0 : 0.0;
            const double b = a - kv * static_cast<double>(sub.degree(w)) / two_m;
            inst.add_coupler(v, w, -b / two_m);
        }
    }
    inst.offset = diag / (2.0 * two_m * two_m);
    return prob;
}

BudgetPolicy default_budget_policy() {
    return [](NodeId n) {
        return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), 1.15)));
    };
}

CommunityResult recursive_bipartition(const Graph& g, const IsingSolverFn& solver,
                                      const BudgetPolicy& budget, std::uint64_t seed) {
    if (g.edge_count() == 0) throw std::invalid_argument("no edges");
    CommunityResult result;
    result.partition.community.assign(g.node_count(), 0);
    result.q = modularity(g, result.partition);  // exactly 0 for one community

    // largest community first; ties on the smaller community id
    using Entry = std::pair<std::size_t, NodeId>;
    auto cmp = [](const Entry& a, const Entry& b) {
        return a.first < b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> work(cmp);
    NodeId next_community = 1;
    work.push({g.node_count(), 0});

    std::uint64_t attempt = 0;
    while (!work.empty()) {
        const NodeId comm = work.top().second;
        work.pop();
        std::vector<NodeId> members;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (result.partition.community[v] == comm) members.push_back(v);
        if (members.size() < 2) continue;

        BipartitionProblem prob;
        try {
            prob = bipartition_ising(g, members);
        } catch (const std::invalid_argument&) {
            continue;  // no internal edges, nothing to split
        }
        const SolveResult sol =
            solver(prob.instance, derive_seed(seed, {attempt}), budget(prob.instance.n));
        ++attempt;
        result.total_solver_steps += sol.steps;

        std::vector<NodeId> plus, minus;
        for (NodeId i = 0; i < prob.instance.n; ++i)
            (sol.best_config.s[i] == 1 ? plus : minus).push_back(prob.nodes[i]);
        if (plus.empty() || minus.empty()) {
            result.trace.push_back({static_cast<NodeId>(members.size()), 0.0, false});
            continue;
        }

        Partition tentative = result.partition;
        for (NodeId v : minus) tentative.community[v] = next_community;
        const double q_new = modularity(g, tentative);
        const double dq = q_new - result.q;
        const bool accept = dq > 1e-12;  // strict increase; symmetric ties stop here
        result.trace.push_back({static_cast<NodeId>(members.size()), dq, accept});
        if (accept) {
            result.partition = std::move(tentative);
            result.q = q_new;
            work.push({plus.size(), comm});
            work.push({minus.size(), next_community});
            ++next_community;
        }
    }
    result.partition.normalize();
    return result;
}

namespace {
// weighted multigraph level for the local-move heuristic
struct Level {
    NodeId n = 0;
    std::vector<std::vector<std::pair<NodeId, double>>> adj;
    std::vector<double> self;  // self-loop weight (counts twice in degrees)
    double m = 0.0;            // total edge weight, self loops included once

    std::vector<double> weighted_degree() const {
        std::vector<double> k(n, 0.0);
        for (NodeId v = 0; v < n; ++v) {
            for (const auto& [w, wt] : adj[v]) k[v] += wt;
            k[v] += 2.0 * self[v];
        }
        return k;
    }
};

Level level_from_graph(const Graph& g) {
    Level lv;
    lv.n = g.node_count();
    lv.adj.resize(lv.n);
    lv.self.assign(lv.n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        lv.adj[u].emplace_back(v, 1.0);
        lv.adj[v].emplace_back(u, 1.0);
    }
    lv.m = static_cast<double>(g.edge_count());
    return lv;
}

// One sweep phase of local moves; returns true when any node moved.
bool local_move_phase(const Level& lv, std::vector<NodeId>& comm, Rng& rng) {
    const auto k = lv.weighted_degree();
    std::vector<double> tot(lv.n, 0.0);
    for (NodeId v = 0; v < lv.n; ++v) tot[comm[v]] += k[v];

    std::vector<NodeId> order(lv.n);
    for (NodeId v = 0; v < lv.n; ++v) order[v] = v;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.next_below(i)]);

    bool any_move = false;
    bool improved = true;
    std::unordered_map<NodeId, double> k_in;
    while (improved) {
        improved = false;
        for (NodeId v : order) {
            const NodeId old_c = comm[v];
            k_in.clear();
            k_in[old_c];  // staying is always a candidate
            for (const auto& [w, wt] : lv.adj[v])
                if (w != v) k_in[comm[w]] += wt;
            tot[old_c] -= k[v];

            // gain of inserting detached v into community c
            auto gain = [&](NodeId c) {
                const double in = k_in.count(c) ? k_in.at(c) : 0.0;
                return in / lv.m - tot[c] * k[v] / (2.0 * lv.m * lv.m);
            };
            NodeId best_c = old_c;
            double best_gain = gain(old_c);
            std::vector<std::pair<NodeId, double>> candidates(k_in.begin(), k_in.end());
            std::sort(candidates.begin(), candidates.end());
            for (const auto& [c, unused] : candidates) {
                const double gc = gain(c);
                if (gc > best_gain + 1e-12) {
                    best_gain = gc;
                    best_c = c;
                }
            }
            tot[best_c] += k[v];
            if (best_c != old_c) {
                comm[v] = best_c;
                improved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

Level contract(const Level& lv, const std::vector<NodeId>& comm, NodeId communities) {
    Level next;
    next.n = communities;
    next.adj.resize(communities);
    next.self.assign(communities, 0.0);
    next.m = lv.m;
    std::map<std::pair<NodeId, NodeId>, double> agg;
    for (NodeId v = 0; v < lv.n; ++v) {
        next.self[comm[v]] += lv.self[v];
        for (const auto& [w, wt] : lv.adj[v]) {
            if (w < v) continue;  // each undirected edge once
            if (comm[v] == comm[w])
                next.self[comm[v]] += wt;
            else {
                auto key = std::minmax(comm[v], comm[w]);
                agg[{key.first, key.second}] += wt;
            }
        }
    }
    for (const auto& [key, wt] : agg) {
        next.adj[key.first].emplace_back(key.second, wt);
        next.adj[key.second].emplace_back(key.first, wt);
    }
    return next;
}
}  // namespace

CommunityResult greedy_local_move(const Graph& g, std::uint64_t seed, const Partition* warm_start) {
    if (g.edge_count() == 0) throw std::invalid_argument("no edges");
    Rng rng(seed);
    Level lv = level_from_graph(g);

    // node -> community, composed across levels
    std::vector<NodeId> assignment(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) assignment[v] = v;
    std::vector<NodeId> comm(lv.n);
    if (warm_start) {
        if (warm_start->community.size() != g.node_count())
            throw std::invalid_argument("warm start size mismatch");
        comm = warm_start->community;
    } else {
        for (NodeId v = 0; v < lv.n; ++v) comm[v] = v;
    }

    while (true) {
        const bool moved = local_move_phase(lv, comm, rng);
        Partition level_part{comm};
        level_part.normalize();
        const NodeId communities = level_part.community_count();
        for (NodeId v = 0; v < g.node_count(); ++v)
            assignment[v] = level_part.community[assignment[v]];
        if (!moved && communities == lv.n) break;
        if (communities == 1) break;
        lv = contract(lv, level_part.community, communities);
        comm.resize(communities);
        for (NodeId v = 0; v < communities; ++v) comm[v] = v;
        if (!moved) break;
    }

    CommunityResult result;
    result.partition.community = std::move(assignment);
    result.partition.normalize();
    result.q = modularity(g, result.partition);
    return result;
}

double resolution_limit_bound(std::size_t m) { return std::sqrt(static_cast<double>(m) / 2.0); }

void write_partition_file(const std::string& path, const Partition& p) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (NodeId v = 0; v < p.community.size(); ++v) out << v << " " << p.community[v] << "\n";
}

Partition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<NodeId, NodeId> entries;
    NodeId v, c;
    while (in >> v >> c) entries[v] = c;
    Partition p;
    p.community.resize(entries.size());
    for (const auto& [node, community] : entries) {
        if (node >= p.community.size()) throw std::runtime_error("non-dense node ids in partition");
        p.community[node] = community;
    }
    return p;
}

void write_trace_file(const std::string& path, const std::vector<SplitTrace>& trace) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "community_size\tdelta_q\taccepted\n";
    for (const auto& t : trace)
        out << t.community_size << "\t" << t.delta_q << "\t" << (t.accepted ? 1 : 0) << "\n";
}

}  // namespace spinbench
