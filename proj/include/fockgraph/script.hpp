// Copyright 2026 The fockgraph Authors
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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fockgraph/types.hpp"

namespace fockgraph {

enum class Verb {
  kAddVertex,     // ADDV <label>
  kDeleteVertex,  // DELV <label>
  kAddEdges,      // ADDE <u> <v> <d>
  kDeleteEdges,   // DELE <u> <v> <d>
  kContract,      // CONTRACT <keep> <remove>
  kMatrix,        // MATRIX
  kDump,          // DUMP
};

std::string_view verb_name(Verb verb);

/// One transformation-script instruction. `labels` holds the vertex
/// arguments in order; `count` is set only for ADDE and DELE.
struct Command {
  Verb verb = Verb::kMatrix;
  std::vector<std::string> labels;
  Occupation count = 0;
  std::size_t line = 0;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Canonical text form, e.g. "ADDE 2 3 1".
std::string to_string(const Command& command);

/// Largest count accepted in scripts and graph files.
inline constexpr Occupation kMaxCount = 65535;

/// Parses a positive integer count in [1, kMaxCount]. Returns false on any
/// malformed or out-of-range token.
bool parse_count(std::string_view token, Occupation& out);

/// Parses a whole script before anything runs. Blank lines and '#' comments
/// are skipped. The first malformed line throws kScriptParse with its line
/// number.
std::vector<Command> parse_script(std::string_view text);

/// Splits on spaces and tabs.
std::vector<std::string> split_tokens(std::string_view line);

/// Splits text into lines, dropping a trailing '\r' from each.
std::vector<std::string> split_lines(std::string_view text);

}  // namespace fockgraph
