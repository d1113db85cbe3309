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

#include "fockgraph/graph_state.hpp"
#include "fockgraph/row_state.hpp"

namespace fockgraph {

enum class EdgeOpKind { kCreate, kAnnihilate };

/// An edge creation or annihilation operator acting on the pair (source,
/// target). The current multiplicity k is read from the state the operator
/// is applied to, not stored here.
struct EdgeOpSpec {
  std::size_t source = 0;
  std::size_t target = 0;
  Occupation count = 1;
  EdgeOpKind kind = EdgeOpKind::kCreate;
};

/// Result of a normalized row operator together with the raw amplitude the
/// plain ladder power produced before it was divided out.
struct RowApplication {
  RowState state;
  Amplitude raw_amplitude;
};

/// Edge annihilation on one row: (a_j)^d / sqrt(k!/(k-d)!). Throws
/// kInsufficientEdges when d exceeds the occupation at j.
RowApplication de_apply_row_traced(const RowState& state, std::size_t j,
                                   Occupation d);
RowState de_apply_row(const RowState& state, std::size_t j, Occupation d);

/// Edge creation on one row: (a_j^+)^d / sqrt((k+d)!/k!). Throws kExclusion
/// when a fermionic mode would exceed one.
RowApplication ae_apply_row_traced(const RowState& state, std::size_t j,
                                   Occupation d, Mode mode);
RowState ae_apply_row(const RowState& state, std::size_t j, Occupation d,
                      Mode mode);

/// Removes d edges between i and j: rows i and j for an undirected graph,
/// row i only (the arc i -> j) for a directed one. Either both rows change or
/// an exception is thrown and nothing does.
GraphState delete_edges(const GraphState& graph, std::size_t i, std::size_t j,
                        Occupation d);

/// Adds d edges between i and j, with the same row selection and atomicity
/// as delete_edges.
GraphState add_edges(const GraphState& graph, std::size_t i, std::size_t j,
                     Occupation d);

GraphState apply(const GraphState& graph, const EdgeOpSpec& op);

}  // namespace fockgraph
