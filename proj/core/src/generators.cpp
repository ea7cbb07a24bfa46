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

#include "spinbench/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "spinbench/rng.hpp"

namespace spinbench {

IsingInstance gen_random_ising(const Graph& topology, std::uint64_t seed) {
    Rng rng(seed);
    IsingInstance inst;
    inst.n = topology.node_count();
    inst.h.assign(inst.n, 0.0);
    inst.family = "ising";
    inst.seed = seed;
    for (const auto& [u, v] : topology.edges()) inst.add_coupler(u, v, rng.next_sign());
    inst.sort_couplers();
    return inst;
}

QuboInstance gen_random_qubo(const Graph& topology, std::uint64_t seed) {
    Rng rng(seed);
    QuboInstance q;
    q.n = topology.node_count();
    q.a.assign(q.n, 0.0);
    q.family = "qubo";
    q.seed = seed;
    for (const auto& [u, v] : topology.edges())
        q.b.push_back({std::min(u, v), std::max(u, v), static_cast<double>(rng.next_sign())});
    return q;
}

namespace {
IsingInstance independent_set_family(const Graph& topology, std::uint64_t seed, bool affinity) {
    Rng rng(seed);
    IsingInstance inst;
    inst.n = topology.node_count();
    inst.h.assign(inst.n, -2.0);
    inst.family = affinity ? "mais" : "mis";
    inst.seed = seed;
    for (const auto& [u, v] : topology.edges()) {
        const double j = affinity ? rng.next_sign() : (rng.next_bool() ? 1.0 : 0.0);
        if (j == 0.0) continue;  // zero couplers leave the instance
        inst.add_coupler(u, v, j);
        inst.h[u] += j;
        inst.h[v] += j;
    }
    inst.sort_couplers();
    return inst;
}
}  // namespace

IsingInstance gen_mis(const Graph& topology, std::uint64_t seed) {
    return independent_set_family(topology, seed, false);
}

IsingInstance gen_mais(const Graph& topology, std::uint64_t seed) {
    return independent_set_family(topology, seed, true);
}

std::set<NodeId> decode_independent_set(const IsingInstance& inst, const SpinConfig& cfg) {
    if (inst.family != "mis" && inst.family != "mais")
        throw std::invalid_argument("decode_independent_set requires a mis or mais instance");
    if (cfg.size() != inst.n) throw std::invalid_argument("spin config length mismatch");
    std::set<NodeId> picked;
    for (NodeId i = 0; i < inst.n; ++i)
        if (cfg.s[i] == 1) picked.insert(i);
    return picked;
}

LoopPolicy loop_policy_from_string(const std::string& name) {
    if (name == "any") return LoopPolicy::Any;
    if (name == "short4") return LoopPolicy::Short4;
    if (name == "long") return LoopPolicy::LongOver8;
    throw std::invalid_argument("unknown loop policy: " + name);
}

std::string to_string(LoopPolicy policy) {
    switch (policy) {
        case LoopPolicy::Any: return "any";
        case LoopPolicy::Short4: return "short4";
        case LoopPolicy::LongOver8: return "long";
    }
    return "any";
}

namespace {
// One self-avoiding random walk on the host until it revisits a node on the
// current path; the portion from the first visit closes into a loop. Returns
// the loop as a node cycle, or empty when the step budget runs out.
std::vector<NodeId> sample_loop(const Graph& host, Rng& rng, std::size_t step_budget) {
    std::vector<NodeId> path;
    std::vector<std::int32_t> pos_on_path(host.node_count(), -1);
    NodeId current = static_cast<NodeId>(rng.next_below(host.node_count()));
    path.push_back(current);
    pos_on_path[current] = 0;
    for (std::size_t step = 0; step < step_budget; ++step) {
        const auto& nbs = host.neighbors(current);
        if (nbs.empty()) return {};
        NodeId next = nbs[rng.next_below(nbs.size())];
        if (path.size() >= 2 && next == path[path.size() - 2]) continue;  // no backtracking
        if (pos_on_path[next] >= 0) {
            return std::vector<NodeId>(path.begin() + pos_on_path[next], path.end());
        }
        pos_on_path[next] = static_cast<std::int32_t>(path.size());
        path.push_back(next);
        current = next;
    }
    return {};
}

bool loop_ok(const std::vector<NodeId>& loop, LoopPolicy policy) {
    switch (policy) {
        case LoopPolicy::Any: return loop.size() >= 4;
        case LoopPolicy::Short4: return loop.size() == 4;
        case LoopPolicy::LongOver8: return loop.size() > 8;
    }
    return false;
}
}  // namespace

IsingInstance gen_planted(const ChimeraSpec& spec, double cycle_density, LoopPolicy policy,
                          std::uint64_t seed) {
    if (cycle_density <= 0.0) throw std::invalid_argument("cycle density must be positive");
    const Graph host = build_chimera(spec);
    const NodeId n = host.node_count();
    Rng rng(seed);

    SpinConfig planted;
    planted.s.resize(n);
    for (NodeId i = 0; i < n; ++i) planted.s[i] = static_cast<std::int8_t>(rng.next_sign());

    const auto loop_count = static_cast<std::size_t>(std::ceil(cycle_density * n));
    const std::size_t step_budget = 4 * static_cast<std::size_t>(n);
    constexpr std::size_t kMaxRetries = 1000;

    std::map<std::pair<NodeId, NodeId>, double> coupler_sum;
    double planted_energy = 0.0;
    for (std::size_t l = 0; l < loop_count; ++l) {
        std::vector<NodeId> loop;
        std::size_t attempts = 0;
        while (true) {
            loop = sample_loop(host, rng, step_budget);
            if (!loop.empty() && loop_ok(loop, policy)) break;
            if (++attempts >= kMaxRetries)
                throw std::runtime_error("loop sampling failed to close a loop within budget");
        }
        const std::size_t len = loop.size();
        const std::size_t frustrated = rng.next_below(len);
        for (std::size_t e = 0; e < len; ++e) {
            NodeId u = loop[e];
            NodeId v = loop[(e + 1) % len];
            // satisfied: J s*_u s*_v = -1; the chosen edge gets the opposite sign
            double j = -static_cast<double>(planted.s[u]) * planted.s[v];
            if (e == frustrated) j = -j;
            if (u > v) std::swap(u, v);
            coupler_sum[{u, v}] += j;
        }
        planted_energy += 2.0 - static_cast<double>(len);
    }

    IsingInstance inst;
    inst.n = n;
    inst.h.assign(n, 0.0);
    inst.family = "planted";
    inst.seed = seed;
    inst.topology_header = spec.to_header();
    for (const auto& [pair, value] : coupler_sum)
        if (value != 0.0) inst.add_coupler(pair.first, pair.second, value);
    inst.sort_couplers();
    inst.planted = planted;
    inst.planted_energy = planted_energy;
    return inst;
}

}  // namespace spinbench
