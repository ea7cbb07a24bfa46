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
#include <numbers>
#include <stdexcept>

#include "spinbench/rng.hpp"
#include "spinbench/solvers.hpp"

namespace spinbench {

namespace {
struct Vec3 {
    double x = 0, y = 0, z = 0;
};

void normalize(Vec3& v) {
    const double len = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    if (len > 0) {
        v.x /= len;
        v.y /= len;
        v.z /= len;
    } else {
        v = {0, 0, 1};
    }
}
}  // namespace

SolveResult spin_dynamics(const IsingInstance& inst, SpinDynamicsMode mode,
                          const SpinDynamicsParams& params) {
    if (inst.n == 0 || params.restarts == 0 || params.steps == 0)
        throw std::invalid_argument("need spins, restarts and steps");
    const NodeId n = inst.n;
    const CouplerAdjacency adj(inst);

    SolveResult result;
    result.best_energy = std::numeric_limits<double>::infinity();
    result.steps = params.restarts * params.steps;

    std::vector<Vec3> spin(n), vel(n), grad(n);
    for (std::uint64_t restart = 0; restart < params.restarts; ++restart) {
        Rng rng(derive_seed(params.seed, {restart}));
        for (NodeId i = 0; i < n; ++i) {
            // uniform direction on the unit sphere
            const double z = 2.0 * rng.next_double() - 1.0;
            const double phi = 2.0 * std::numbers::pi * rng.next_double();
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            spin[i] = {r * std::cos(phi), r * std::sin(phi), z};
            vel[i] = {0, 0, 0};
        }

        for (std::uint64_t step = 0; step < params.steps; ++step) {
            // linear decay hitting exactly zero on the final step
            const double f = params.steps > 1 ? params.f_start * (1.0 - static_cast<double>(step) /
                                                                            (params.steps - 1))
                                              : 0.0;
            // synchronous force evaluation: dE/dspin_i = (F, 0, h_i + sum J z_j)
            for (NodeId i = 0; i < n; ++i) {
                double zfield = inst.h[i];
                for (const auto& [nb, val] : adj.at[i]) zfield += val * spin[nb].z;
                grad[i] = {f, 0.0, zfield};
            }
            if (mode == SpinDynamicsMode::Steepest) {
                for (NodeId i = 0; i < n; ++i) {
                    spin[i].x -= params.step_size * grad[i].x;
                    spin[i].y -= params.step_size * grad[i].y;
                    spin[i].z -= params.step_size * grad[i].z;
                    normalize(spin[i]);
                }
            } else {
                for (NodeId i = 0; i < n; ++i) {
                    vel[i].x = params.damping * vel[i].x - params.step_size * grad[i].x;
                    vel[i].y = params.damping * vel[i].y - params.step_size * grad[i].y;
                    vel[i].z = params.damping * vel[i].z - params.step_size * grad[i].z;
                    spin[i].x += vel[i].x;
                    spin[i].y += vel[i].y;
                    spin[i].z += vel[i].z;
                    normalize(spin[i]);
                }
            }
        }

        SpinConfig cfg;
        cfg.s.resize(n);
        for (NodeId i = 0; i < n; ++i) cfg.s[i] = spin[i].z >= 0.0 ? 1 : -1;
        const double e = energy(inst, cfg);
        if (e < result.best_energy) {
            result.best_energy = e;
            result.best_config = std::move(cfg);
        }
    }
    return result;
}

}  // namespace spinbench
