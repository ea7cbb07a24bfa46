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
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinbench/ising.hpp"
#include "spinbench/solvers.hpp"

namespace spinbench {

struct SuccessCriterion {
    enum class Kind { Optimal, WithinFraction };
    Kind kind = Kind::Optimal;
    double epsilon = 0.0;  // WithinFraction only, in (0,1)

    static SuccessCriterion optimal() { return {Kind::Optimal, 0.0}; }
    static SuccessCriterion within_fraction(double eps);
    static SuccessCriterion from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Success of one trial against a known optimum. Optimal demands equality to
/// 1e-9; WithinFraction(eps) demands relative quality q >= 1 - eps with
/// q = achieved/optimal for negative optima. Positive optima are rejected
/// (every family here has nonpositive ground energy).
bool judge(const SuccessCriterion& criterion, double achieved_energy, double optimal_energy);

struct TtsEstimate {
    double tts99 = 0.0;
    double tts_mean = 0.0;
    bool excluded = false;  // p = 0: no success observed, record thrown out
};

/// tts99 = t_trial * ceil(log(0.01)/log(1-p)); tts_mean = t_trial / p.
TtsEstimate tts(double p_hat, double t_trial);

/// Histogram of relative quality q = achieved/optimal over (..., 1]. Bin b
/// covers (1-(b+1)*width, 1-b*width]; percent_label(b) names its top edge.
struct QualityHistogram {
    double bin_width = 0.01;
    std::map<int, std::size_t> counts;

    double percent_label(int bin) const { return 100.0 * (1.0 - bin * bin_width); }
};

QualityHistogram quality_histogram(const std::vector<std::pair<double, double>>& achieved_optimal,
                                   double bin_width);

enum class XTransform { SqrtN, N, LogN };

XTransform x_transform_from_string(const std::string& name);
std::string to_string(XTransform x);
double apply_transform(XTransform x, double n);

struct ScalingFit {
    XTransform x_transform = XTransform::SqrtN;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least squares of log10(tts) against transform(n). Needs >= 3 points with
/// positive tts values; a zero-variance residual reports R^2 = 1.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& n_tts, XTransform x);

struct SolverConfig {
    std::string id;  // brute | dp | sa | spin | sqa
    nlohmann::json params;
};

/// Dispatch by solver id; params not present fall back to defaults. The dp
/// solver reads the Chimera spec from the instance topology header.
SolveResult run_named_solver(const SolverConfig& solver, const IsingInstance& inst,
                             std::uint64_t seed);

/// Campaign config (JSON): {"family", "sizes", "instances", "solvers":
/// [{"id", "params"}], "trials", "gauges", "criterion", "seed",
/// "t_trial_us"} plus "cycle_density"/"loop_policy" for the planted family.
/// "trials" counts anneals per gauge; an instance row pools all gauges.
struct CampaignConfig {
    std::string family = "ising";
    std::vector<NodeId> sizes;  // Chimera grid sizes k (n = 8k^2)
    int instances = 10;
    std::vector<SolverConfig> solvers;
    int trials = 20;
    int gauges = 1;
    SuccessCriterion criterion;
    std::uint64_t seed = 0;
    double t_trial_us = 20.0;
    double cycle_density = 0.2;
    std::string loop_policy = "any";

    static CampaignConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct BenchRecord {
    std::string family;
    NodeId n = 0;
    int instance = 0;
    std::string solver;
    int gauge_pool = 0;
    int trials = 0;  // total over all gauges
    int successes = 0;
    double p_hat = 0.0;
    double tts99_us = 0.0;
    double tts_mean_us = 0.0;
    double best_energy = 0.0;
    double opt_energy = 0.0;
    bool excluded = false;
};

struct AggregateRow {
    std::string solver;
    NodeId n = 0;
    int counted = 0;
    int excluded = 0;
    double mean_tts99 = 0.0;
    double se_tts99 = 0.0;
    double mean_tts_mean = 0.0;
    double se_tts_mean = 0.0;
};

struct CampaignResult {
    std::vector<BenchRecord> records;
    std::vector<AggregateRow> aggregates;
};

/// Runs the full campaign: per (size, instance) generate the instance,
/// compute the reference optimum (planted record, exact DP, or brute force;
/// otherwise the row is excluded as unknown-optimum), then for each solver
/// pool successes over gauges x trials. Deterministic given the master seed,
/// independent of `jobs`.
CampaignResult run_campaign(const CampaignConfig& config, int jobs = 1);

/// records.csv, summary.csv, scaling_<solver>.tsv and config.json in `dir`.
void write_campaign_outputs(const std::string& dir, const CampaignConfig& config,
                            const CampaignResult& result,
                            XTransform x_transform = XTransform::SqrtN);

/// Shortest round-trip decimal form; deterministic across runs.
std::string format_double(double value);

}  // namespace spinbench
