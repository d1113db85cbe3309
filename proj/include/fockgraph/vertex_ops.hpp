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
#include <utility>
#include <vector>

#include "fockgraph/amplitude.hpp"
#include "fockgraph/graph_state.hpp"
#include "fockgraph/row_state.hpp"

namespace fockgraph {

/// Appends an isolated vertex: every row gains a zero mode and an all-zero
/// row is added. Throws kLabel if the label is taken or empty.
GraphState add_vertex(const GraphState& graph, const std::string& label);

struct CleanedRow {
  /// Row m with every occupation lowered to zero, renormalized.
  RowState row;
  /// Amplitude of prod_{j in ADJ(m)} a_{m,j}^{n_{m,j}} applied to row m; its
  /// square is prod_j n_{m,j}!.
  Amplitude raw_amplitude;
};

/// First half of vertex deletion: empties row m with plain annihilation
/// powers and reports the accumulated amplitude.
CleanedRow clean_row(const GraphState& graph, std::size_t m);

/// Second half of vertex deletion: zeroes mode m in every row that has an
/// arc or edge into m, using the normalized edge annihilation operator with
/// d = n_{j,m}. Row m itself is left alone, so for an undirected graph the
/// result is an intermediate state that is not symmetric.
GraphState clean_neighbor_entries(const GraphState& graph, std::size_t m);

/// Cleans row m and the entries pointing at m, then drops row m and mode m
/// from the remaining rows. Remaining labels keep their order.
GraphState delete_vertex(const GraphState& graph, std::size_t m);

enum class TransferDirection { kUndirected, kOutgoing, kIncoming };

struct Transfer {
  std::string neighbor;
  Occupation multiplicity = 0;
  TransferDirection direction = TransferDirection::kUndirected;

  friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct ContractionReport {
  std::string kept;
  std::string removed;
  /// Edges re-attached to the kept vertex, in neighbour order.
  std::vector<Transfer> transferred;
  /// Neighbours whose transfer was skipped because the simple graph already
  /// had that edge on the kept vertex. Always empty for multigraphs.
  std::vector<std::string> saturated;
};

/// Merges vertex j into vertex i. The multiplicities between j and each
/// other neighbour m are captured, j is deleted, and the captured edges are
/// re-created on (i, m). Edges between i and j disappear with j.
std::pair<GraphState, ContractionReport> contract(const GraphState& graph,
                                                  std::size_t i,
                                                  std::size_t j);

}  // namespace fockgraph
