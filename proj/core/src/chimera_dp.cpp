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

#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinbench/solvers.hpp"

namespace spinbench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline int spin_bit(unsigned nibble, unsigned i) { return 1 - 2 * static_cast<int>((nibble >> i) & 1u); }

using Table16 = std::array<std::array<double, 16>, 16>;

// pair energy sum_i J_i * sA_i * sB_i over two 4-spin nibbles
Table16 pair_table(const std::array<double, 4>& j) {
    Table16 t{};
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            double e = 0.0;
            for (unsigned i = 0; i < 4; ++i) e += j[i] * spin_bit(a, i) * spin_bit(b, i);
            t[a][b] = e;
        }
    return t;
}

struct ColumnTables {
    std::vector<Table16> cell;  // [row][left nibble][right nibble]
    std::vector<Table16> vert;  // [row] between row and row+1, left nibbles
};

struct DpTables {
    std::vector<ColumnTables> columns;          // per column
    std::vector<std::vector<Table16>> hor;      // [col][row], boundary col -> col+1
};

DpTables classify_couplers(const IsingInstance& inst, const ChimeraSpec& spec) {
    const NodeId rows = spec.rows;
    const NodeId cols = spec.cols;
    // raw coefficient holders
    std::vector<std::array<std::array<double, 4>, 4>> intra(rows * cols,
                                                            std::array<std::array<double, 4>, 4>{});
    std::vector<std::array<double, 4>> vert(rows * cols, std::array<double, 4>{});
    std::vector<std::array<double, 4>> hor(rows * cols, std::array<double, 4>{});

    auto cell_of = [&](NodeId id) { return spec.cell_row(id) * cols + spec.cell_col(id); };
    for (const auto& c : inst.couplers) {
        const NodeId r1 = spec.cell_row(c.i), c1 = spec.cell_col(c.i);
        const NodeId r2 = spec.cell_row(c.j), c2 = spec.cell_col(c.j);
        const NodeId s1 = spec.side(c.i), s2 = spec.side(c.j);
        const NodeId i1 = spec.index(c.i), i2 = spec.index(c.j);
        if (r1 == r2 && c1 == c2 && s1 != s2) {
            const NodeId left = s1 == 0 ? i1 : i2;
            const NodeId right = s1 == 0 ? i2 : i1;
            intra[cell_of(c.i)][left][right] += c.value;
        } else if (s1 == 0 && s2 == 0 && c1 == c2 && i1 == i2 &&
                   (r1 + 1 == r2 || r2 + 1 == r1)) {
            vert[std::min(r1, r2) * cols + c1][i1] += c.value;
        } else if (s1 == 1 && s2 == 1 && r1 == r2 && i1 == i2 &&
                   (c1 + 1 == c2 || c2 + 1 == c1)) {
            hor[r1 * cols + std::min(c1, c2)][i1] += c.value;
        } else {
            throw std::invalid_argument("non-Chimera coupler (" + std::to_string(c.i) + "," +
                                        std::to_string(c.j) + ")");
        }
    }

    DpTables t;
    t.columns.resize(cols);
    t.hor.resize(cols > 0 ? cols - 1 : 0);
    for (NodeId c = 0; c < cols; ++c) {
        auto& col = t.columns[c];
        col.cell.resize(rows);
        col.vert.resize(rows > 0 ? rows - 1 : 0);
        for (NodeId r = 0; r < rows; ++r) {
            std::array<double, 4> h_left{}, h_right{};
            for (NodeId i = 0; i < 4; ++i) {
                h_left[i] = inst.h[spec.node_id(r, c, 0, i)];
                h_right[i] = inst.h[spec.node_id(r, c, 1, i)];
            }
            const auto& jq = intra[r * cols + c];
            Table16 cellE{};
            for (unsigned a = 0; a < 16; ++a)
                for (unsigned b = 0; b < 16; ++b) {
                    double e = 0.0;
                    for (unsigned i = 0; i < 4; ++i) {
                        e += h_left[i] * spin_bit(a, i);
                        e += h_right[i] * spin_bit(b, i);
                        for (unsigned jx = 0; jx < 4; ++jx)
                            e += jq[i][jx] * spin_bit(a, i) * spin_bit(b, jx);
                    }
                    cellE[a][b] = e;
                }
            col.cell[r] = cellE;
            if (r + 1 < rows) col.vert[r] = pair_table(vert[r * cols + c]);
            if (c + 1 < cols) t.hor[c].push_back(pair_table(hor[r * cols + c]));
        }
    }
    return t;
}

// Minimal internal energy of one column for fixed right nibbles; optionally
// recovers the arg-min left nibbles.
double column_energy(const ColumnTables& col, NodeId rows, std::uint64_t right_state,
                     std::vector<unsigned>* left_out) {
    std::array<double, 16> f;
    std::vector<std::array<std::uint8_t, 16>> back;
    if (left_out) back.resize(rows);
    {
        const unsigned r0 = static_cast<unsigned>(right_state & 0xF);
        for (unsigned l = 0; l < 16; ++l) f[l] = col.cell[0][l][r0];
    }
    for (NodeId r = 1; r < rows; ++r) {
        const unsigned rn = static_cast<unsigned>((right_state >> (4 * r)) & 0xF);
        std::array<double, 16> next;
        for (unsigned l = 0; l < 16; ++l) {
            double best = kInf;
            unsigned arg = 0;
            for (unsigned lp = 0; lp < 16; ++lp) {
                const double cand = f[lp] + col.vert[r - 1][lp][l];
                if (cand < best) {
                    best = cand;
                    arg = lp;
                }
            }
            next[l] = best + col.cell[r][l][rn];
            if (left_out) back[r][l] = static_cast<std::uint8_t>(arg);
        }
        f = next;
    }
    double best = kInf;
    unsigned arg = 0;
    for (unsigned l = 0; l < 16; ++l)
        if (f[l] < best) {
            best = f[l];
            arg = l;
        }
    if (left_out) {
        left_out->assign(rows, 0);
        (*left_out)[rows - 1] = arg;
        for (NodeId r = rows; r-- > 1;) (*left_out)[r - 1] = back[r][(*left_out)[r]];
    }
    return best;
}

double boundary_energy(const std::vector<Table16>& hor, NodeId rows, std::uint64_t left_state,
                       std::uint64_t right_state) {
    double e = 0.0;
    for (NodeId r = 0; r < rows; ++r)
        e += hor[r][(left_state >> (4 * r)) & 0xF][(right_state >> (4 * r)) & 0xF];
    return e;
}

}  // namespace

SolveResult exact_chimera_dp(const IsingInstance& inst, const ChimeraSpec& spec,
                             std::size_t memory_budget_bytes) {
    const NodeId rows = spec.rows;
    const NodeId cols = spec.cols;
    if (inst.n != spec.node_count())
        throw std::invalid_argument("instance size does not match the Chimera spec");
    if (4 * rows >= 62) throw std::invalid_argument("frontier too large to index");

    const std::uint64_t states = std::uint64_t{1} << (4 * rows);
    const std::size_t needed = static_cast<std::size_t>(states) * sizeof(double) * (cols + 2);
    if (needed > memory_budget_bytes)
        throw std::runtime_error("frontier too large: needs " + std::to_string(needed) +
                                 " bytes for 2^" + std::to_string(4 * rows) +
                                 " states over " + std::to_string(cols) + " columns, budget is " +
                                 std::to_string(memory_budget_bytes));

    const DpTables tables = classify_couplers(inst, spec);

    // dp[c][R] = min energy of columns 0..c with column c right nibbles = R
    std::vector<std::vector<double>> dp(cols);
    std::uint64_t touched = 0;
    for (NodeId c = 0; c < cols; ++c) {
        std::vector<double> col_min(states);
        for (std::uint64_t rgt = 0; rgt < states; ++rgt)
            col_min[rgt] = column_energy(tables.columns[c], rows, rgt, nullptr);
        if (c == 0) {
            dp[0] = std::move(col_min);
        } else {
            // min-plus join over the separable horizontal couplers: replace
            // one right nibble of the previous column at a time
            std::vector<double> g = dp[c - 1];
            std::vector<double> ng(states);
            for (NodeId r = 0; r < rows; ++r) {
                const Table16& w = tables.hor[c - 1][r];
                const std::uint64_t nib_mask = std::uint64_t{0xF} << (4 * r);
                for (std::uint64_t base = 0; base < states; ++base) {
                    if (base & nib_mask) continue;
                    std::array<double, 16> olds;
                    for (unsigned y = 0; y < 16; ++y)
                        olds[y] = g[base | (std::uint64_t{y} << (4 * r))];
                    for (unsigned z = 0; z < 16; ++z) {
                        double best = kInf;
                        for (unsigned y = 0; y < 16; ++y) {
                            const double cand = olds[y] + w[y][z];
                            if (cand < best) best = cand;
                        }
                        ng[base | (std::uint64_t{z} << (4 * r))] = best;
                    }
                }
                std::swap(g, ng);
            }
            dp[c].resize(states);
            for (std::uint64_t rgt = 0; rgt < states; ++rgt) dp[c][rgt] = g[rgt] + col_min[rgt];
        }
        touched += states;
    }

    // backtrack the right nibbles column by column, then the left nibbles
    std::vector<std::uint64_t> right_state(cols);
    {
        double best = kInf;
        std::uint64_t arg = 0;
        for (std::uint64_t rgt = 0; rgt < states; ++rgt)
            if (dp[cols - 1][rgt] < best) {
                best = dp[cols - 1][rgt];
                arg = rgt;
            }
        right_state[cols - 1] = arg;
    }
    for (NodeId c = cols - 1; c > 0; --c) {
        double best = kInf;
        std::uint64_t arg = 0;
        for (std::uint64_t rgt = 0; rgt < states; ++rgt) {
            const double cand =
                dp[c - 1][rgt] + boundary_energy(tables.hor[c - 1], rows, rgt, right_state[c]);
            if (cand < best) {
                best = cand;
                arg = rgt;
            }
        }
        right_state[c - 1] = arg;
    }

    SpinConfig cfg;
    cfg.s.assign(inst.n, 1);
    for (NodeId c = 0; c < cols; ++c) {
        std::vector<unsigned> left;
        column_energy(tables.columns[c], rows, right_state[c], &left);
        for (NodeId r = 0; r < rows; ++r) {
            const unsigned rn = static_cast<unsigned>((right_state[c] >> (4 * r)) & 0xF);
            for (NodeId i = 0; i < 4; ++i) {
                cfg.s[spec.node_id(r, c, 0, i)] = static_cast<std::int8_t>(spin_bit(left[r], i));
                cfg.s[spec.node_id(r, c, 1, i)] = static_cast<std::int8_t>(spin_bit(rn, i));
            }
        }
    }

    SolveResult result;
    result.best_config = std::move(cfg);
    result.best_energy = energy(inst, result.best_config);
    result.steps = touched;
    result.optimality_proven = true;
    return result;
}

}  // namespace spinbench
