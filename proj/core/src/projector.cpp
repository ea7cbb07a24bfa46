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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinbench/rng.hpp"
#include "spinbench/solvers.hpp"

namespace spinbench {

namespace {
double diagonal_scale(const IsingInstance& inst) {
    double b = 0.0;
    for (double v : inst.h) b += std::abs(v);
    for (const auto& c : inst.couplers) b += std::abs(c.value);
    return b;
}
}  // namespace

SolveResult projector_sqa(const IsingInstance& inst, const ProjectorParams& params) {
    if (inst.n == 0 || params.walkers == 0 || params.steps == 0)
        throw std::invalid_argument("need spins, walkers and steps");
    const NodeId n = inst.n;
    const std::uint64_t walkers = params.walkers;
    const CouplerAdjacency adj(inst);

    const double scale = diagonal_scale(inst);
    const double tau = params.tau > 0.0 ? params.tau : 0.5 / std::max(scale, 1e-9);
    if (tau * scale >= 1.0)
        throw std::invalid_argument("tau too large: 1 - tau*H must stay positive (tau*scale = " +
                                    std::to_string(tau * scale) + ")");

    Rng rng(params.seed);
    std::vector<std::vector<std::int8_t>> state(walkers, std::vector<std::int8_t>(n));
    std::vector<double> diag(walkers);  // per-walker diagonal energy, offset excluded
    std::vector<double> weight(walkers, 1.0);

    SolveResult result;
    result.best_energy = std::numeric_limits<double>::infinity();
    result.steps = walkers * params.steps;
    result.optimality_proven = false;

    auto observe = [&](std::uint64_t w) {
        const double e = diag[w] + inst.offset;
        if (e < result.best_energy) {
            result.best_energy = e;
            result.best_config = SpinConfig{state[w]};
        }
    };

    for (std::uint64_t w = 0; w < walkers; ++w) {
        for (NodeId i = 0; i < n; ++i) state[w][i] = static_cast<std::int8_t>(rng.next_sign());
        double e = 0.0;
        for (NodeId i = 0; i < n; ++i) e += inst.h[i] * state[w][i];
        for (const auto& c : inst.couplers) e += c.value * state[w][c.i] * state[w][c.j];
        diag[w] = e;
        observe(w);
    }

    std::vector<std::vector<std::int8_t>> new_state(walkers);
    std::vector<double> new_diag(walkers);
    for (std::uint64_t step = 0; step < params.steps; ++step) {
        const double f =
            params.steps > 1
                ? params.f_start +
                      (params.f_end - params.f_start) * static_cast<double>(step) / (params.steps - 1)
                : params.f_end;
        const double flip_mass = std::max(0.0, f) * tau;  // per candidate spin

        for (std::uint64_t w = 0; w < walkers; ++w) {
            const double stay_mass = 1.0 - tau * diag[w];
            const double total = stay_mass + flip_mass * n;
            const double r = rng.next_double() * total;
            if (r >= stay_mass && flip_mass > 0.0) {
                auto idx = static_cast<NodeId>((r - stay_mass) / flip_mass);
                if (idx >= n) idx = n - 1;
                diag[w] += adj.flip_delta(inst, state[w], idx);
                state[w][idx] = static_cast<std::int8_t>(-state[w][idx]);
                observe(w);
            }
            weight[w] *= total;
        }

        // keep weights normalized; resample when the effective sample size halves
        double sum = 0.0, sum_sq = 0.0;
        for (double v : weight) {
            sum += v;
            sum_sq += v * v;
        }
        if (!(sum > 0.0) || !std::isfinite(sum))
            throw std::runtime_error("walker weight collapse at step " + std::to_string(step) +
                                     " (sum = " + std::to_string(sum) + ")");
        const double mean = sum / static_cast<double>(walkers);
        for (double& v : weight) v /= mean;
        sum = static_cast<double>(walkers);
        sum_sq /= mean * mean;

        const double ess = sum * sum / sum_sq;
        if (ess < params.resample_threshold * static_cast<double>(walkers)) {
            // systematic resampling into equal-weight copies
            const double start = rng.next_double();
            double cumulative = 0.0;
            std::uint64_t src = 0;
            for (std::uint64_t w = 0; w < walkers; ++w) {
                const double target = (static_cast<double>(w) + start) * sum / walkers;
                while (src + 1 < walkers && cumulative + weight[src] <= target) {
                    cumulative += weight[src];
                    ++src;
                }
                new_state[w] = state[src];
                new_diag[w] = diag[src];
            }
            state.swap(new_state);
            diag.swap(new_diag);
            std::fill(weight.begin(), weight.end(), 1.0);
        }
    }

    result.best_energy = energy(inst, result.best_config);
    return result;
}

}  // namespace spinbench
