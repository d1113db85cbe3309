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

#include <optional>
#include <string>
#include <string_view>

#include "fockgraph/graph_state.hpp"

namespace fockgraph {

enum class GraphFormat { kMatrix, kEdges };

std::optional<GraphFormat> parse_format(std::string_view text);

/// Reads a graph file.
///
///   graph <fermion|boson> <directed|undirected> <n>
///   <n labels>
///   then n matrix rows (kMatrix) or "u v [mult]" lines (kEdges)
///
/// Mode and orientation come from the header. Every failure, including
/// invariant violations, throws kInputParse naming the offending line.
GraphState parse_graph_file(std::string_view text, GraphFormat format);

/// Matrix-format text that parse_graph_file reads back to an equal state.
std::string write_matrix(const GraphState& graph);

/// "vertices=<n>" then one "<label> |n,...,n> amp2=<p/q>" line per vertex.
std::string dump_state(const GraphState& graph);

}  // namespace fockgraph
