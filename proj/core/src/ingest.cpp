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

#include "spinbench/ingest.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace spinbench {

namespace {
// Howard Hinnant's days-from-civil; avoids timezone-dependent mktime.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}
}  // namespace

std::int64_t parse_iso8601(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2d%n", &y, &mo, &d, &consumed) != 3 || consumed != 10)
        throw std::invalid_argument("bad ISO-8601 timestamp: " + text);
    std::size_t pos = 10;
    if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
        int time_consumed = 0;
        if (std::sscanf(text.c_str() + pos + 1, "%2d:%2d:%2d%n", &h, &mi, &s, &time_consumed) != 3 ||
            time_consumed != 8)
            throw std::invalid_argument("bad ISO-8601 timestamp: " + text);
        pos += 1 + 8;
        if (pos < text.size() && text[pos] == '.') {  // fractional seconds, truncated
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
    }
    std::int64_t offset = 0;
    if (pos < text.size()) {
        if (text[pos] == 'Z') {
            ++pos;
        } else if (text[pos] == '+' || text[pos] == '-') {
            const int sign = text[pos] == '+' ? 1 : -1;
            int oh = 0, om = 0, off_consumed = 0;
            if (std::sscanf(text.c_str() + pos + 1, "%2d:%2d%n", &oh, &om, &off_consumed) != 2 ||
                off_consumed != 5)
                throw std::invalid_argument("bad ISO-8601 offset: " + text);
            offset = -sign * (oh * 3600 + om * 60);
            pos += 6;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("bad ISO-8601 timestamp: " + text);
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60)
        throw std::invalid_argument("bad ISO-8601 timestamp: " + text);
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s + offset;
}

std::vector<MessageRecord> read_message_records(std::istream& in, std::size_t* skipped) {
    std::vector<MessageRecord> records;
    std::size_t bad = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            MessageRecord rec;
            rec.timestamp = parse_iso8601(j.at("t").get<std::string>());
            rec.sender = j.at("from").get<std::string>();
            if (rec.sender.empty()) throw std::runtime_error("empty sender");
            rec.referred = j.at("refs").get<std::vector<std::string>>();
            records.push_back(std::move(rec));
        } catch (const std::exception&) {
            ++bad;
        }
    }
    if (skipped) *skipped = bad;
    return records;
}

std::vector<PathRecord> read_path_records(std::istream& in, std::size_t* skipped) {
    std::vector<PathRecord> records;
    std::size_t bad = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            PathRecord rec;
            rec.timestamp = parse_iso8601(j.at("t").get<std::string>());
            rec.path = j.at("path").get<std::vector<std::string>>();
            if (rec.path.empty()) throw std::runtime_error("empty path");
            for (std::size_t i = 0; i + 1 < rec.path.size(); ++i)
                if (rec.path[i] == rec.path[i + 1])
                    throw std::runtime_error("consecutive duplicate in path");
            records.push_back(std::move(rec));
        } catch (const std::exception&) {
            ++bad;
        }
    }
    if (skipped) *skipped = bad;
    return records;
}

namespace {
class IdInterner {
  public:
    NodeId intern(const std::string& name) {
        auto [it, inserted] = ids_.emplace(name, static_cast<NodeId>(labels_.size()));
        if (inserted) labels_.push_back(name);
        return it->second;
    }
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::string> labels_;
};

IngestResult finish(const IdInterner& interner,
                    const std::set<std::pair<NodeId, NodeId>>& undirected, std::size_t skipped) {
    Graph full(static_cast<NodeId>(interner.labels().size()));
    for (const auto& [u, v] : undirected) full.add_edge(u, v);
    const auto keep = full.largest_component();
    IngestResult out;
    out.graph = full.induced_subgraph(keep);
    for (NodeId v : keep) out.labels.push_back(interner.labels()[v]);
    out.skipped = skipped;
    return out;
}
}  // namespace

IngestResult grow_mention_graph(const std::vector<MessageRecord>& records, std::int64_t start,
                                std::int64_t end) {
    if (start > end) throw std::invalid_argument("start must be <= end");
    IdInterner interner;
    std::unordered_set<std::uint64_t> directed;
    bool any = false;
    for (const auto& rec : records) {
        if (rec.timestamp < start || rec.timestamp > end) continue;
        any = true;
        const NodeId from = interner.intern(rec.sender);
        for (const auto& name : rec.referred) {
            if (name == rec.sender) continue;  // self-refer
            const NodeId to = interner.intern(name);
            directed.insert((static_cast<std::uint64_t>(from) << 32) | to);
        }
    }
    if (!any) throw std::runtime_error("no records in window");
    std::set<std::pair<NodeId, NodeId>> mutual;
    for (std::uint64_t key : directed) {
        const NodeId from = static_cast<NodeId>(key >> 32);
        const NodeId to = static_cast<NodeId>(key & 0xFFFFFFFFu);
        if (from < to && directed.count((static_cast<std::uint64_t>(to) << 32) | from))
            mutual.insert({from, to});
    }
    return finish(interner, mutual, 0);
}

IngestResult grow_path_graph(const std::vector<PathRecord>& records, std::int64_t start,
                             std::int64_t end) {
    if (start > end) throw std::invalid_argument("start must be <= end");
    IdInterner interner;
    std::set<std::pair<NodeId, NodeId>> edges;
    bool any = false;
    for (const auto& rec : records) {
        if (rec.timestamp < start || rec.timestamp > end) continue;
        any = true;
        for (std::size_t i = 0; i + 1 < rec.path.size(); ++i) {
            NodeId u = interner.intern(rec.path[i]);
            NodeId v = interner.intern(rec.path[i + 1]);
            if (u > v) std::swap(u, v);
            edges.insert({u, v});
        }
        if (rec.path.size() == 1) interner.intern(rec.path[0]);
    }
    if (!any) throw std::runtime_error("no records in window");
    return finish(interner, edges, 0);
}

void write_id_map_file(const std::string& path, const std::vector<std::string>& labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (NodeId v = 0; v < labels.size(); ++v) out << v << " " << labels[v] << "\n";
}

}  // namespace spinbench
