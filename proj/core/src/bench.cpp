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

#include "spinbench/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include "spinbench/chimera.hpp"
#include "spinbench/generators.hpp"
#include "spinbench/rng.hpp"

namespace spinbench {

SuccessCriterion SuccessCriterion::within_fraction(double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("epsilon must be in (0,1)");
    return {Kind::WithinFraction, eps};
}

SuccessCriterion SuccessCriterion::from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "optimal") return optimal();
    if (j.is_object() && j.contains("within_fraction"))
        return within_fraction(j["within_fraction"].get<double>());
    throw std::invalid_argument("criterion must be \"optimal\" or {\"within_fraction\": eps}");
}

nlohmann::json SuccessCriterion::to_json() const {
    if (kind == Kind::Optimal) return "optimal";
    return nlohmann::json{{"within_fraction", epsilon}};
}

bool judge(const SuccessCriterion& criterion, double achieved_energy, double optimal_energy) {
    if (optimal_energy > 0.0) throw std::invalid_argument("unsupported sign regime");
    if (criterion.kind == SuccessCriterion::Kind::Optimal)
        return std::abs(achieved_energy - optimal_energy) <= 1e-9;
    if (optimal_energy == 0.0) return std::abs(achieved_energy) <= 1e-9;
    const double q = achieved_energy / optimal_energy;
    return q >= 1.0 - criterion.epsilon;
}

TtsEstimate tts(double p_hat, double t_trial) {
    if (p_hat < 0.0 || p_hat > 1.0) throw std::invalid_argument("p_hat must be in [0,1]");
    TtsEstimate out;
    if (p_hat == 0.0) {
        out.tts99 = out.tts_mean = std::numeric_limits<double>::infinity();
        out.excluded = true;
        return out;
    }
    if (p_hat == 1.0) {
        out.tts99 = out.tts_mean = t_trial;
        return out;
    }
    const long double repeats =
        std::ceil(std::log(0.01L) / std::log(1.0L - static_cast<long double>(p_hat)));
    out.tts99 = t_trial * static_cast<double>(repeats);
    out.tts_mean = t_trial / p_hat;
    return out;
}

QualityHistogram quality_histogram(const std::vector<std::pair<double, double>>& achieved_optimal,
                                   double bin_width) {
    if (bin_width <= 0.0) throw std::invalid_argument("bin width must be positive");
    QualityHistogram hist;
    hist.bin_width = bin_width;
    for (const auto& [achieved, optimal] : achieved_optimal) {
        if (optimal >= 0.0) throw std::invalid_argument("unsupported sign regime");
        const double q = achieved / optimal;
        int bin = static_cast<int>(std::floor((1.0 - q) / bin_width + 1e-9));
        if (bin < 0) bin = 0;
        ++hist.counts[bin];
    }
    return hist;
}

XTransform x_transform_from_string(const std::string& name) {
    if (name == "sqrt_n") return XTransform::SqrtN;
    if (name == "n") return XTransform::N;
    if (name == "log_n") return XTransform::LogN;
    throw std::invalid_argument("unknown x transform: " + name);
}

std::string to_string(XTransform x) {
    switch (x) {
        case XTransform::SqrtN: return "sqrt_n";
        case XTransform::N: return "n";
        case XTransform::LogN: return "log_n";
    }
    return "sqrt_n";
}

double apply_transform(XTransform x, double n) {
    switch (x) {
        case XTransform::SqrtN: return std::sqrt(n);
        case XTransform::N: return n;
        case XTransform::LogN: return std::log10(n);
    }
    return n;
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& n_tts, XTransform x) {
    if (n_tts.size() < 3) throw std::invalid_argument("need at least 3 points");
    ScalingFit fit;
    fit.x_transform = x;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, t] : n_tts) {
        if (t <= 0.0) throw std::invalid_argument("tts values must be positive");
        const double xv = apply_transform(x, n);
        const double yv = std::log10(t);
        sx += xv;
        sy += yv;
        sxx += xv * xv;
        sxy += xv * yv;
    }
    const double count = static_cast<double>(n_tts.size());
    const double denom = sxx - sx * sx / count;
    if (std::abs(denom) < 1e-14) throw std::invalid_argument("x values are degenerate");
    fit.slope = (sxy - sx * sy / count) / denom;
    fit.intercept = (sy - fit.slope * sx) / count;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / count;
    for (const auto& [n, t] : n_tts) {
        const double xv = apply_transform(x, n);
        const double yv = std::log10(t);
        const double r = yv - (fit.slope * xv + fit.intercept);
        ss_res += r * r;
        ss_tot += (yv - mean_y) * (yv - mean_y);
    }
    fit.r_squared = ss_tot < 1e-300 ? 1.0 : 1.0 - ss_res / ss_tot;  // flat data fits exactly
    return fit;
}

SolveResult run_named_solver(const SolverConfig& solver, const IsingInstance& inst,
                             std::uint64_t seed) {
    const auto& p = solver.params;
    if (solver.id == "brute") {
        return brute_force(inst);
    }
    if (solver.id == "dp") {
        if (inst.topology_header.empty())
            throw std::invalid_argument("dp solver needs a chimera topology header");
        const auto spec = ChimeraSpec::from_header(inst.topology_header);
        const auto budget_mb = p.value("memory_budget_mb", 512.0);
        return exact_chimera_dp(inst, spec, static_cast<std::size_t>(budget_mb * 1048576.0));
    }
    if (solver.id == "sa") {
        AnnealSchedule sched;
        sched.sweeps = p.value("sweeps", std::uint64_t{200});
        sched.restarts = p.value("restarts", std::uint64_t{100});
        sched.t_start = p.value("t_start", 0.0);
        sched.t_end = p.value("t_end", 0.05);
        sched.seed = seed;
        return metropolis_anneal(inst, sched);
    }
    if (solver.id == "spin") {
        SpinDynamicsParams params;
        const auto mode = p.value("mode", std::string("steepest")) == "momentum"
                              ? SpinDynamicsMode::Momentum
                              : SpinDynamicsMode::Steepest;
        params.steps = p.value("steps", std::uint64_t{4000});
        params.step_size = p.value("step_size", 1e-2);
        params.f_start = p.value("f_start", 2.0);
        params.damping = p.value("damping", 0.9);
        params.restarts = p.value("restarts", std::uint64_t{1});
        params.seed = seed;
        return spin_dynamics(inst, mode, params);
    }
    if (solver.id == "sqa") {
        ProjectorParams params;
        params.walkers = p.value("walkers", std::uint64_t{256});
        params.steps = p.value("steps", std::uint64_t{2000});
        params.tau = p.value("tau", 0.0);
        params.f_start = p.value("f_start", 2.0);
        params.f_end = p.value("f_end", 0.01);
        params.resample_threshold = p.value("resample_threshold", 0.5);
        params.seed = seed;
        return projector_sqa(inst, params);
    }
    throw std::invalid_argument("unknown solver id: " + solver.id);
}

CampaignConfig CampaignConfig::from_json(const nlohmann::json& j) {
    CampaignConfig c;
    c.family = j.at("family").get<std::string>();
    c.sizes = j.at("sizes").get<std::vector<NodeId>>();
    c.instances = j.value("instances", 10);
    for (const auto& s : j.at("solvers"))
        c.solvers.push_back({s.at("id").get<std::string>(), s.value("params", nlohmann::json::object())});
    c.trials = j.at("trials").get<int>();
    c.gauges = j.at("gauges").get<int>();
    c.criterion = SuccessCriterion::from_json(j.at("criterion"));
    c.seed = j.at("seed").get<std::uint64_t>();
    c.t_trial_us = j.value("t_trial_us", 20.0);
    c.cycle_density = j.value("cycle_density", 0.2);
    c.loop_policy = j.value("loop_policy", "any");
    if (c.sizes.empty() || c.instances <= 0 || c.solvers.empty() || c.trials <= 0 || c.gauges <= 0)
        throw std::invalid_argument("campaign config needs sizes, instances, solvers, trials, gauges");
    return c;
}

nlohmann::json CampaignConfig::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["sizes"] = sizes;
    j["instances"] = instances;
    auto arr = nlohmann::json::array();
    for (const auto& s : solvers) arr.push_back({{"id", s.id}, {"params", s.params}});
    j["solvers"] = arr;
    j["trials"] = trials;
    j["gauges"] = gauges;
    j["criterion"] = criterion.to_json();
    j["seed"] = seed;
    j["t_trial_us"] = t_trial_us;
    if (family == "planted") {
        j["cycle_density"] = cycle_density;
        j["loop_policy"] = loop_policy;
    }
    return j;
}

namespace {
IsingInstance make_instance(const CampaignConfig& config, NodeId k, std::uint64_t seed) {
    const ChimeraSpec spec{k, k, {}};
    if (config.family == "planted")
        return gen_planted(spec, config.cycle_density, loop_policy_from_string(config.loop_policy),
                           seed);
    const Graph topo = build_chimera(spec);
    IsingInstance inst;
    if (config.family == "ising")
        inst = gen_random_ising(topo, seed);
    else if (config.family == "mis")
        inst = gen_mis(topo, seed);
    else if (config.family == "mais")
        inst = gen_mais(topo, seed);
    else
        throw std::invalid_argument("unknown campaign family: " + config.family);
    inst.topology_header = spec.to_header();
    return inst;
}

// Exact reference energy, or nullopt when no exact method is feasible.
std::optional<double> reference_optimum(const IsingInstance& inst, NodeId k) {
    if (inst.planted_energy) return *inst.planted_energy;
    const ChimeraSpec spec{k, k, {}};
    if (4 * k <= 20) return exact_chimera_dp(inst, spec).best_energy;
    if (inst.n <= 26) return brute_force(inst).best_energy;
    return std::nullopt;
}
}  // namespace

CampaignResult run_campaign(const CampaignConfig& config, int jobs) {
    struct Task {
        NodeId k = 0;
        int instance = 0;
    };
    std::vector<Task> tasks;
    for (NodeId k : config.sizes)
        for (int i = 0; i < config.instances; ++i) tasks.push_back({k, i});

    std::vector<std::vector<BenchRecord>> per_task(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) return;
            const auto [k, inst_idx] = tasks[t];
            const std::uint64_t inst_seed =
                derive_seed(config.seed, {0x1157ULL, k, static_cast<std::uint64_t>(inst_idx)});
            const IsingInstance inst = make_instance(config, k, inst_seed);
            const auto optimal = reference_optimum(inst, k);

            std::vector<BenchRecord> rows;
            for (std::size_t s = 0; s < config.solvers.size(); ++s) {
                BenchRecord rec;
                rec.family = config.family;
                rec.n = inst.n;
                rec.instance = inst_idx;
                rec.solver = config.solvers[s].id;
                rec.gauge_pool = config.gauges;
                rec.trials = config.gauges * config.trials;
                rec.best_energy = std::numeric_limits<double>::infinity();
                if (!optimal) {
                    // no exact reference: record kept but never aggregated
                    rec.opt_energy = std::numeric_limits<double>::quiet_NaN();
                    rec.excluded = true;
                    rows.push_back(rec);
                    continue;
                }
                rec.opt_energy = *optimal;
                int successes = 0;
                for (int g = 0; g < config.gauges; ++g) {
                    const Gauge gauge = random_gauge(
                        inst.n, derive_seed(config.seed, {0x6a06eULL, k,
                                                          static_cast<std::uint64_t>(inst_idx),
                                                          static_cast<std::uint64_t>(g)}));
                    const IsingInstance gauged = apply_gauge(inst, gauge);
                    for (int trial = 0; trial < config.trials; ++trial) {
                        const std::uint64_t run_seed = derive_seed(
                            config.seed, {0x50126ULL, k, static_cast<std::uint64_t>(inst_idx), s,
                                          static_cast<std::uint64_t>(g),
                                          static_cast<std::uint64_t>(trial)});
                        const SolveResult res =
                            run_named_solver(config.solvers[s], gauged, run_seed);
                        if (judge(config.criterion, res.best_energy, *optimal)) ++successes;
                        rec.best_energy = std::min(rec.best_energy, res.best_energy);
                    }
                }
                rec.successes = successes;
                rec.p_hat = static_cast<double>(successes) / rec.trials;
                const TtsEstimate est = tts(rec.p_hat, config.t_trial_us);
                rec.tts99_us = est.tts99;
                rec.tts_mean_us = est.tts_mean;
                rec.excluded = est.excluded;
                rows.push_back(rec);
            }
            per_task[t] = std::move(rows);
        }
    };

    const int thread_count = std::max(1, jobs);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    CampaignResult result;
    for (auto& rows : per_task)
        for (auto& rec : rows) result.records.push_back(std::move(rec));

    // per (solver, size) aggregates over non-excluded instances
    for (const auto& solver : config.solvers) {
        for (NodeId k : config.sizes) {
            AggregateRow agg;
            agg.solver = solver.id;
            agg.n = 8 * k * k;
            std::vector<double> v99, vmean;
            for (const auto& rec : result.records) {
                if (rec.solver != solver.id || rec.n != agg.n) continue;
                if (rec.excluded) {
                    ++agg.excluded;
                    continue;
                }
                v99.push_back(rec.tts99_us);
                vmean.push_back(rec.tts_mean_us);
            }
            agg.counted = static_cast<int>(v99.size());
            auto mean_se = [](const std::vector<double>& v) {
                if (v.empty()) return std::pair(0.0, 0.0);
                double mean = 0;
                for (double x : v) mean += x;
                mean /= static_cast<double>(v.size());
                double var = 0;
                for (double x : v) var += (x - mean) * (x - mean);
                const double se = v.size() > 1
                                      ? std::sqrt(var / (static_cast<double>(v.size() - 1))) /
                                            std::sqrt(static_cast<double>(v.size()))
                                      : 0.0;
                return std::pair(mean, se);
            };
            std::tie(agg.mean_tts99, agg.se_tts99) = mean_se(v99);
            std::tie(agg.mean_tts_mean, agg.se_tts_mean) = mean_se(vmean);
            result.aggregates.push_back(agg);
        }
    }
    return result;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_campaign_outputs(const std::string& dir, const CampaignConfig& config,
                            const CampaignResult& result, XTransform x_transform) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    std::ofstream csv(fs::path(dir) / "records.csv");
    if (!csv) throw std::runtime_error("cannot open records.csv in " + dir);
    csv << "family,n,instance,solver,gauge_pool,trials,successes,p_hat,tts99_us,tts_mean_us,"
           "best_energy,opt_energy,excluded\n";
    for (const auto& r : result.records) {
        csv << r.family << "," << r.n << "," << r.instance << "," << r.solver << ","
            << r.gauge_pool << "," << r.trials << "," << r.successes << ","
            << format_double(r.p_hat) << "," << format_double(r.tts99_us) << ","
            << format_double(r.tts_mean_us) << "," << format_double(r.best_energy) << ","
            << format_double(r.opt_energy) << "," << (r.excluded ? 1 : 0) << "\n";
    }
    csv.close();

    std::ofstream summary(fs::path(dir) / "summary.csv");
    summary << "solver,n,counted,excluded,mean_tts99_us,se_tts99_us,mean_tts_mean_us,"
               "se_tts_mean_us\n";
    for (const auto& a : result.aggregates) {
        summary << a.solver << "," << a.n << "," << a.counted << "," << a.excluded << ","
                << format_double(a.mean_tts99) << "," << format_double(a.se_tts99) << ","
                << format_double(a.mean_tts_mean) << "," << format_double(a.se_tts_mean) << "\n";
    }
    summary.close();

    for (const auto& solver : config.solvers) {
        std::ofstream tsv(fs::path(dir) / ("scaling_" + solver.id + ".tsv"));
        tsv << to_string(x_transform) << "\tlog10_tts_mean_us\n";
        for (const auto& a : result.aggregates) {
            if (a.solver != solver.id || a.counted == 0 || a.mean_tts_mean <= 0.0) continue;
            tsv << format_double(apply_transform(x_transform, a.n)) << "\t"
                << format_double(std::log10(a.mean_tts_mean)) << "\n";
        }
    }

    std::ofstream cfg(fs::path(dir) / "config.json");
    cfg << config.to_json().dump(2) << "\n";
}

}  // namespace spinbench
