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

#include <bit>
#include <stdexcept>

#include "spinbench/solvers.hpp"

namespace spinbench {

namespace {
// -1 sorts before +1, position 0 most significant
bool lex_less(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}
}  // namespace

SolveResult brute_force(const IsingInstance& inst) {
    if (inst.n > 26) throw std::invalid_argument("oracle size limit");
    const NodeId n = inst.n;
    const CouplerAdjacency adj(inst);

    std::vector<std::int8_t> spins(n, 1);
    // local field of each spin under the current assignment
    std::vector<double> field(inst.h);
    for (const auto& c : inst.couplers) {
        field[c.i] += c.value * spins[c.j];
        field[c.j] += c.value * spins[c.i];
    }
    SpinConfig start{spins};
    double e = energy(inst, start);

    double best = e;
    std::vector<std::int8_t> best_spins = spins;
    std::uint64_t degeneracy = 1;

    const std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << n);
    for (std::uint64_t g = 1; g < total; ++g) {
        const int flip = std::countr_zero(g);  // Gray-code step flips this spin
        e += -2.0 * spins[flip] * field[flip];
        spins[flip] = static_cast<std::int8_t>(-spins[flip]);
        for (const auto& [nb, val] : adj.at[flip]) field[nb] += 2.0 * val * spins[flip];
        if (e < best) {
            best = e;
            best_spins = spins;
            degeneracy = 1;
        } else if (e == best) {
            ++degeneracy;
            if (lex_less(spins, best_spins)) best_spins = spins;
        }
    }

    SolveResult result;
    result.best_config = SpinConfig{std::move(best_spins)};
    result.best_energy = energy(inst, result.best_config);
    result.steps = total;
    result.optimality_proven = true;
    result.degeneracy = degeneracy;
    return result;
}

}  // namespace spinbench
