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
#include <iosfwd>
#include <string>
#include <vector>

#include "spinbench/graph.hpp"

namespace spinbench {

/// Seconds since the Unix epoch parsed from ISO-8601 (date, or date time
/// with optional fractional seconds and optional Z / +-hh:mm offset).
std::int64_t parse_iso8601(const std::string& text);

struct MessageRecord {
    std::int64_t timestamp = 0;
    std::string sender;
    std::vector<std::string> referred;
};

struct PathRecord {
    std::int64_t timestamp = 0;
    std::vector<std::string> path;
};

struct IngestResult {
    Graph graph;
    std::vector<std::string> labels;  // node id -> original string id
    std::size_t skipped = 0;          // malformed records dropped
};

/// JSON-lines inputs, one record per line:
///   {"t": "2014-05-01T12:00:00Z", "from": "alice", "refs": ["bob", ...]}
///   {"t": "...", "path": ["as1", "as2", ...]}
/// Malformed lines are skipped and counted.
std::vector<MessageRecord> read_message_records(std::istream& in, std::size_t* skipped);
std::vector<PathRecord> read_path_records(std::istream& in, std::size_t* skipped);

/// Mutual-mention graph over [start, end]: a directed mention u->v per
/// in-window refer, an undirected edge kept only when both directions are
/// present, then the largest weakly connected component. Self-refers are
/// dropped. Throws when the window holds no records.
IngestResult grow_mention_graph(const std::vector<MessageRecord>& records, std::int64_t start,
                                std::int64_t end);

/// Route-path graph over [start, end]: an undirected edge per consecutive
/// pair of each in-window path, duplicates collapsed, largest component
/// returned. Throws when the window holds no records.
IngestResult grow_path_graph(const std::vector<PathRecord>& records, std::int64_t start,
                             std::int64_t end);

void write_id_map_file(const std::string& path, const std::vector<std::string>& labels);

}  // namespace spinbench
