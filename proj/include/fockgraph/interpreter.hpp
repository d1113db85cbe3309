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

#include <iosfwd>
#include <optional>
#include <string>

#include "fockgraph/graph_io.hpp"
#include "fockgraph/graph_state.hpp"
#include "fockgraph/script.hpp"
#include "fockgraph/vertex_ops.hpp"

namespace fockgraph {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInputParse = 3,
  kExitScriptParse = 4,
  kExitOperation = 5,
  kExitIo = 6,
};

enum class Emit { kMatrix, kState, kTrace };

std::optional<Emit> parse_emit(std::string_view text);

struct RunConfig {
  std::string input_path;
  GraphFormat format = GraphFormat::kMatrix;
  /// When set, the input header must declare the same mode/orientation.
  std::optional<Mode> mode;
  std::optional<Orientation> orientation;
  std::optional<std::string> script_path;
  std::optional<std::string> output_path;
  Emit emit = Emit::kMatrix;
};

/// Runs one command through the Fock engine, resolving labels against the
/// current graph. MATRIX and DUMP leave the graph unchanged. For CONTRACT the
/// report is written to `report` when given.
GraphState apply_command(const GraphState& graph, const Command& command,
                         ContractionReport* report = nullptr);

/// Loads, transforms and emits. Output goes to config.output_path or `out`;
/// diagnostics go to `err`. Returns one of ExitCode.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Command-line front end: parses argv into a RunConfig and calls execute.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace fockgraph
