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

#include <benchmark/benchmark.h>

#include "spinbench/generators.hpp"
#include "spinbench/solvers.hpp"
#include "spinbench/synthnet.hpp"

using namespace spinbench;

static void BM_energy(benchmark::State& state) {
    const NodeId k = static_cast<NodeId>(state.range(0));
    const IsingInstance inst = gen_random_ising(build_chimera({k, k, {}}), 1);
    SpinConfig cfg;
    cfg.s.assign(inst.n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(energy(inst, cfg));
    state.SetItemsProcessed(state.iterations() * inst.couplers.size());
}
BENCHMARK(BM_energy)->Arg(2)->Arg(8);

static void BM_brute_force(benchmark::State& state) {
    const IsingInstance inst =
        gen_random_ising(build_chimera({1, static_cast<NodeId>(state.range(0)), {}}), 2);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force(inst).best_energy);
}
BENCHMARK(BM_brute_force)->Arg(1)->Arg(2);

static void BM_chimera_dp(benchmark::State& state) {
    const NodeId k = static_cast<NodeId>(state.range(0));
    const ChimeraSpec spec{k, k, {}};
    const IsingInstance inst = gen_random_ising(build_chimera(spec), 3);
    for (auto _ : state) benchmark::DoNotOptimize(exact_chimera_dp(inst, spec).best_energy);
}
BENCHMARK(BM_chimera_dp)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_metropolis_sweeps(benchmark::State& state) {
    const NodeId k = static_cast<NodeId>(state.range(0));
    const IsingInstance inst = gen_random_ising(build_chimera({k, k, {}}), 4);
    AnnealSchedule sched;
    sched.sweeps = 100;
    sched.restarts = 1;
    sched.seed = 5;
    for (auto _ : state) benchmark::DoNotOptimize(metropolis_anneal(inst, sched).best_energy);
    state.SetItemsProcessed(state.iterations() * sched.sweeps * inst.n);
}
BENCHMARK(BM_metropolis_sweeps)->Arg(2)->Arg(8);

static void BM_projector_step(benchmark::State& state) {
    const IsingInstance inst = gen_random_ising(build_chimera({2, 2, {}}), 6);
    ProjectorParams params;
    params.walkers = 128;
    params.steps = 50;
    params.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(projector_sqa(inst, params).best_energy);
    state.SetItemsProcessed(state.iterations() * params.walkers * params.steps);
}
BENCHMARK(BM_projector_step);

static void BM_chimera_minor(benchmark::State& state) {
    const ChimeraSpec spec{8, 8, {}};
    MinorGenParams params;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        params.seed = ++seed;
        benchmark::DoNotOptimize(generate_chimera_minor(spec, params).graph.edge_count());
    }
}
BENCHMARK(BM_chimera_minor)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
