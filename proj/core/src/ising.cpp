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

#include "spinbench/ising.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "spinbench/rng.hpp"

namespace spinbench {

bool SpinConfig::valid() const {
    return std::all_of(s.begin(), s.end(), [](std::int8_t v) { return v == 1 || v == -1; });
}

void IsingInstance::add_coupler(NodeId i, NodeId j, double value) {
    if (i == j) throw std::invalid_argument("coupler endpoints must differ");
    if (i >= n || j >= n) throw std::out_of_range("coupler index out of range");
    if (i > j) std::swap(i, j);
    couplers.push_back({i, j, value});
}

void IsingInstance::sort_couplers() {
    std::sort(couplers.begin(), couplers.end(), [](const Coupler& a, const Coupler& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
}

double energy(const IsingInstance& inst, const SpinConfig& cfg) {
    if (cfg.size() != inst.n) throw std::invalid_argument("spin config length mismatch");
    double e = 0.0;
    for (NodeId i = 0; i < inst.n; ++i) e += inst.h[i] * cfg.s[i];
    for (const auto& c : inst.couplers) e += c.value * cfg.s[c.i] * cfg.s[c.j];
    return e + inst.offset;
}

double qubo_value(const QuboInstance& q, const std::vector<std::int8_t>& x) {
    if (x.size() != q.n) throw std::invalid_argument("assignment length mismatch");
    double e = 0.0;
    for (NodeId i = 0; i < q.n; ++i) e += q.a[i] * x[i];
    for (const auto& c : q.b) e += c.value * x[c.i] * x[c.j];
    return e + q.offset;
}

IsingInstance qubo_to_ising(const QuboInstance& q) {
    IsingInstance inst;
    inst.n = q.n;
    inst.h.assign(q.n, 0.0);
    inst.offset = q.offset;
    inst.family = q.family;
    inst.seed = q.seed;
    inst.topology_header = q.topology_header;
    // x_i = (1 - s_i)/2
    for (NodeId i = 0; i < q.n; ++i) {
        inst.h[i] -= q.a[i] / 2.0;
        inst.offset += q.a[i] / 2.0;
    }
    for (const auto& c : q.b) {
        inst.add_coupler(c.i, c.j, c.value / 4.0);
        inst.h[c.i] -= c.value / 4.0;
        inst.h[c.j] -= c.value / 4.0;
        inst.offset += c.value / 4.0;
    }
    inst.sort_couplers();
    return inst;
}

QuboInstance ising_to_qubo(const IsingInstance& inst) {
    QuboInstance q;
    q.n = inst.n;
    q.a.assign(inst.n, 0.0);
    q.offset = inst.offset;
    q.family = inst.family;
    q.seed = inst.seed;
    q.topology_header = inst.topology_header;
    // s_i = 1 - 2x_i
    for (NodeId i = 0; i < inst.n; ++i) {
        q.a[i] -= 2.0 * inst.h[i];
        q.offset += inst.h[i];
    }
    for (const auto& c : inst.couplers) {
        q.b.push_back({c.i, c.j, 4.0 * c.value});
        q.a[c.i] -= 2.0 * c.value;
        q.a[c.j] -= 2.0 * c.value;
        q.offset += c.value;
    }
    return q;
}

IsingInstance apply_gauge(const IsingInstance& inst, const Gauge& g) {
    if (g.signs.size() != inst.n) throw std::invalid_argument("gauge length mismatch");
    IsingInstance out = inst;
    for (NodeId i = 0; i < inst.n; ++i) out.h[i] = g.signs[i] * inst.h[i];
    for (std::size_t k = 0; k < inst.couplers.size(); ++k)
        out.couplers[k].value = g.signs[inst.couplers[k].i] * g.signs[inst.couplers[k].j] *
                                inst.couplers[k].value;
    if (inst.planted) {
        // the planted optimum maps along with the instance
        SpinConfig mapped = *inst.planted;
        for (NodeId i = 0; i < inst.n; ++i) mapped.s[i] = static_cast<std::int8_t>(g.signs[i] * mapped.s[i]);
        out.planted = std::move(mapped);
    }
    return out;
}

Gauge random_gauge(NodeId n, std::uint64_t seed) {
    Rng rng(seed);
    Gauge g;
    g.signs.resize(n);
    for (NodeId i = 0; i < n; ++i) g.signs[i] = static_cast<std::int8_t>(rng.next_sign());
    return g;
}

bool fits_coupler_grid(const IsingInstance& inst, double step, double tol) {
    double scale = 0.0;
    for (double v : inst.h) scale = std::max(scale, std::abs(v));
    for (const auto& c : inst.couplers) scale = std::max(scale, std::abs(c.value));
    if (scale == 0.0) return true;
    auto on_grid = [&](double v) {
        const double r = v / scale / step;
        return std::abs(r - std::round(r)) <= tol;
    };
    for (double v : inst.h)
        if (!on_grid(v)) return false;
    for (const auto& c : inst.couplers)
        if (!on_grid(c.value)) return false;
    return true;
}

CouplerAdjacency::CouplerAdjacency(const IsingInstance& inst) : at(inst.n) {
    for (const auto& c : inst.couplers) {
        at[c.i].emplace_back(c.j, c.value);
        at[c.j].emplace_back(c.i, c.value);
    }
}

}  // namespace spinbench
