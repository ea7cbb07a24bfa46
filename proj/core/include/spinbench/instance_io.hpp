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

#include <iosfwd>
#include <string>

#include "spinbench/ising.hpp"

namespace spinbench {

/// Instance file schema (JSON):
///   {"family", "seed", "n", "offset", "h": [...], "J": [[i,j,val],...],
///    "topology": "chimera k k", "planted": [+-1,...], "planted_energy": ...}
/// QUBO files use keys "a"/"b" in place of "h"/"J". Writing and re-reading
/// preserves every field bit for bit.
void save_ising(std::ostream& out, const IsingInstance& inst);
void save_ising_file(const std::string& path, const IsingInstance& inst);
IsingInstance load_ising(std::istream& in);
IsingInstance load_ising_file(const std::string& path);

void save_qubo(std::ostream& out, const QuboInstance& q);
void save_qubo_file(const std::string& path, const QuboInstance& q);
QuboInstance load_qubo(std::istream& in);
QuboInstance load_qubo_file(const std::string& path);

/// True when the file holds a QUBO ("a"/"b" keys) rather than an Ising
/// instance.
bool is_qubo_file(const std::string& path);

/// Loads either kind, converting QUBO files through qubo_to_ising.
IsingInstance load_ising_or_qubo_file(const std::string& path);

}  // namespace spinbench
