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

#include "spinbench/instance_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace spinbench {

namespace {
using nlohmann::json;

json couplers_to_json(const std::vector<Coupler>& couplers) {
    json arr = json::array();
    for (const auto& c : couplers) arr.push_back(json::array({c.i, c.j, c.value}));
    return arr;
}

std::vector<Coupler> couplers_from_json(const json& arr, NodeId n) {
    std::vector<Coupler> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 3) throw std::runtime_error("bad coupler triple");
        Coupler c{item[0].get<NodeId>(), item[1].get<NodeId>(), item[2].get<double>()};
        if (c.i >= n || c.j >= n || c.i == c.j) throw std::runtime_error("bad coupler indices");
        if (c.i > c.j) std::swap(c.i, c.j);
        out.push_back(c);
    }
    return out;
}

json instance_to_json(const IsingInstance& inst) {
    json j;
    j["family"] = inst.family;
    j["seed"] = inst.seed;
    j["n"] = inst.n;
    j["offset"] = inst.offset;
    j["h"] = inst.h;
    j["J"] = couplers_to_json(inst.couplers);
    if (!inst.topology_header.empty()) j["topology"] = inst.topology_header;
    if (inst.planted) {
        json arr = json::array();
        for (std::int8_t s : inst.planted->s) arr.push_back(static_cast<int>(s));
        j["planted"] = arr;
    }
    if (inst.planted_energy) j["planted_energy"] = *inst.planted_energy;
    return j;
}

IsingInstance instance_from_json(const json& j) {
    IsingInstance inst;
    inst.family = j.value("family", "");
    inst.seed = j.value("seed", std::uint64_t{0});
    inst.n = j.at("n").get<NodeId>();
    inst.offset = j.value("offset", 0.0);
    inst.h = j.at("h").get<std::vector<double>>();
    if (inst.h.size() != inst.n) throw std::runtime_error("h length does not match n");
    inst.couplers = couplers_from_json(j.at("J"), inst.n);
    inst.topology_header = j.value("topology", "");
    if (j.contains("planted")) {
        SpinConfig cfg;
        for (const auto& v : j["planted"]) {
            const int s = v.get<int>();
            if (s != 1 && s != -1) throw std::runtime_error("planted entries must be +-1");
            cfg.s.push_back(static_cast<std::int8_t>(s));
        }
        if (cfg.size() != inst.n) throw std::runtime_error("planted length does not match n");
        inst.planted = std::move(cfg);
    }
    if (j.contains("planted_energy")) inst.planted_energy = j["planted_energy"].get<double>();
    return inst;
}
}  // namespace

void save_ising(std::ostream& out, const IsingInstance& inst) {
    out << instance_to_json(inst).dump(2) << "\n";
}

void save_ising_file(const std::string& path, const IsingInstance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_ising(out, inst);
}

IsingInstance load_ising(std::istream& in) {
    json j;
    in >> j;
    return instance_from_json(j);
}

IsingInstance load_ising_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_ising(in);
}

void save_qubo(std::ostream& out, const QuboInstance& q) {
    json j;
    j["family"] = q.family;
    j["seed"] = q.seed;
    j["n"] = q.n;
    j["offset"] = q.offset;
    j["a"] = q.a;
    j["b"] = couplers_to_json(q.b);
    if (!q.topology_header.empty()) j["topology"] = q.topology_header;
    out << j.dump(2) << "\n";
}

void save_qubo_file(const std::string& path, const QuboInstance& q) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    save_qubo(out, q);
}

QuboInstance load_qubo(std::istream& in) {
    json j;
    in >> j;
    QuboInstance q;
    q.family = j.value("family", "");
    q.seed = j.value("seed", std::uint64_t{0});
    q.n = j.at("n").get<NodeId>();
    q.offset = j.value("offset", 0.0);
    q.a = j.at("a").get<std::vector<double>>();
    if (q.a.size() != q.n) throw std::runtime_error("a length does not match n");
    q.b = couplers_from_json(j.at("b"), q.n);
    q.topology_header = j.value("topology", "");
    return q;
}

QuboInstance load_qubo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_qubo(in);
}

bool is_qubo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j.contains("a") && j.contains("b");
}

IsingInstance load_ising_or_qubo_file(const std::string& path) {
    if (is_qubo_file(path)) return qubo_to_ising(load_qubo_file(path));
    return load_ising_file(path);
}

}  // namespace spinbench
