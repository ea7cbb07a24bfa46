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
#include <string>

#include "spinbench/chimera.hpp"
#include "spinbench/ising.hpp"

namespace spinbench {

struct SolveResult {
    SpinConfig best_config;
    double best_energy = 0.0;
    std::uint64_t steps = 0;  // evaluations, proposals or walker updates
    bool optimality_proven = false;
    std::uint64_t degeneracy = 0;  // ground-state count when known, else 0
};

/// Exhaustive minimum over all 2^n configurations via Gray-code enumeration
/// with incremental energy updates. Also counts ground-state degeneracy.
/// Among degenerate optima returns the config that is lexicographically
/// smallest with spins ordered -1 < +1. Limited to n <= 26.
SolveResult brute_force(const IsingInstance& inst);

/// Exact ground state of a Chimera-structured instance by frontier dynamic
/// programming: cells are swept column by column while conditioning on the
/// 4 right-side spins per cell of the active column, a state space of
/// 2^(4*rows). Throws if a coupler is not a Chimera edge of `spec` or if the
/// frontier exceeds `memory_budget_bytes` (the message reports the need).
SolveResult exact_chimera_dp(const IsingInstance& inst, const ChimeraSpec& spec,
                             std::size_t memory_budget_bytes = std::size_t{512} << 20);

struct AnnealSchedule {
    std::uint64_t sweeps = 200;
    double t_start = 0.0;  // <= 0 picks 3 * max coupling magnitude
    double t_end = 0.05;
    std::uint64_t restarts = 100;
    std::uint64_t seed = 0;
};

/// Metropolis single-spin-flip annealer with a geometric temperature decay;
/// best result over all restarts, per-restart RNG streams derived from
/// (seed, restart index).
SolveResult metropolis_anneal(const IsingInstance& inst, const AnnealSchedule& sched);

enum class SpinDynamicsMode { Steepest, Momentum };

struct SpinDynamicsParams {
    std::uint64_t steps = 4000;
    double step_size = 1e-2;
    double f_start = 2.0;  // transverse field, decayed linearly to 0
    double damping = 0.9;  // momentum mode only
    std::uint64_t restarts = 1;
    std::uint64_t seed = 0;
};

/// Classical dynamics of unit 3-vector spins under the coupler energy in z
/// plus a decaying transverse field in x; steepest mode renormalizes after
/// every synchronous force step, momentum mode integrates a damped velocity.
/// Final z signs are rounded to a SpinConfig.
SolveResult spin_dynamics(const IsingInstance& inst, SpinDynamicsMode mode,
                          const SpinDynamicsParams& params);

struct ProjectorParams {
    std::uint64_t walkers = 256;
    double tau = 0.0;  // <= 0 picks 0.5 / (sum|h| + sum|J|)
    double f_start = 2.0;
    double f_end = 0.01;
    std::uint64_t steps = 2000;
    std::uint64_t seed = 0;
    double resample_threshold = 0.5;  // resample when ESS < walkers * threshold
};

/// Projector-style simulated quantum annealing: a weighted population of
/// basis states evolved by the linearized imaginary-time propagator. Each
/// step a walker keeps its state (weight scaled by the non-flip factor) or
/// flips one spin with probability proportional to F(t) * tau; F decays
/// linearly from f_start to f_end; the population is resampled when the
/// effective sample size halves. Returns the lowest-energy basis state
/// observed. Throws at start when tau is too large for the coupling scale
/// and mid-run on weight collapse.
SolveResult projector_sqa(const IsingInstance& inst, const ProjectorParams& params);

}  // namespace spinbench
