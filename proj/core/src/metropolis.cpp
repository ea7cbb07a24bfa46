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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinbench/rng.hpp"
#include "spinbench/solvers.hpp"

namespace spinbench {

namespace {
double default_t_start(const IsingInstance& inst) {
    double scale = 0.0;
    for (double v : inst.h) scale = std::max(scale, std::abs(v));
    for (const auto& c : inst.couplers) scale = std::max(scale, std::abs(c.value));
    return scale > 0.0 ? 3.0 * scale : 1.0;
}
}  // namespace

SolveResult metropolis_anneal(const IsingInstance& inst, const AnnealSchedule& sched) {
    if (sched.t_end <= 0.0) throw std::invalid_argument("t_end must be positive");
    if (sched.restarts == 0 || inst.n == 0)
        throw std::invalid_argument("need at least one restart and one spin");
    const double t_start = sched.t_start > 0.0 ? sched.t_start : default_t_start(inst);
    if (t_start < sched.t_end) throw std::invalid_argument("t_start must be >= t_end");
    const NodeId n = inst.n;
    const CouplerAdjacency adj(inst);
    const double ratio = sched.t_end / t_start;

    SolveResult result;
    result.best_energy = std::numeric_limits<double>::infinity();
    result.steps = sched.restarts * sched.sweeps * n;

    std::vector<std::int8_t> spins(n);
    for (std::uint64_t restart = 0; restart < sched.restarts; ++restart) {
        Rng rng(derive_seed(sched.seed, {restart}));
        for (NodeId i = 0; i < n; ++i) spins[i] = static_cast<std::int8_t>(rng.next_sign());
        SpinConfig cfg{spins};
        double e = energy(inst, cfg);
        double restart_best = e;
        std::vector<std::int8_t> restart_best_spins = spins;

        for (std::uint64_t sweep = 0; sweep < sched.sweeps; ++sweep) {
            const double frac =
                sched.sweeps > 1 ? static_cast<double>(sweep) / (sched.sweeps - 1) : 1.0;
            const double t = t_start * std::pow(ratio, frac);
            for (NodeId i = 0; i < n; ++i) {
                const double delta = adj.flip_delta(inst, spins, i);
                if (delta <= 0.0 || rng.next_double() < std::exp(-delta / t)) {
                    spins[i] = static_cast<std::int8_t>(-spins[i]);
                    e += delta;
                    if (e < restart_best) {
                        restart_best = e;
                        restart_best_spins = spins;
                    }
                }
            }
        }
        // incremental bookkeeping must agree with a full recomputation
        const double check = energy(inst, SpinConfig{spins});
        if (std::abs(check - e) > 1e-9)
            throw std::logic_error("incremental energy drifted from full recomputation");

        if (restart_best < result.best_energy) {
            result.best_energy = restart_best;
            result.best_config = SpinConfig{restart_best_spins};
        }
    }

    result.best_energy = energy(inst, result.best_config);
    return result;
}

}  // namespace spinbench
