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
#include <optional>
#include <string>
#include <vector>

#include "fockgraph/row_state.hpp"
#include "fockgraph/types.hpp"

namespace fockgraph {

/// A graph stored as one Fock row state per vertex: the occupation of mode j
/// in row i is the number of edges between vertex i and vertex j.
///
/// Values are immutable from the outside; every operation returns a new
/// GraphState. Between public operations the state satisfies the invariants
/// checked by `validate()`.
class GraphState {
 public:
  GraphState() = default;

  /// Assembles a state without checking invariants. Used for intermediate
  /// states and for exercising `validate()`.
  static GraphState unchecked(std::vector<RowState> rows, Mode mode,
                              Orientation orientation,
                              std::vector<std::string> labels);

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  Mode mode() const { return mode_; }
  Orientation orientation() const { return orientation_; }

  const std::vector<RowState>& rows() const { return rows_; }
  const RowState& row(std::size_t i) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const;

  /// Internal index of a label, if present.
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Like index_of but throws kLabel for an unknown label.
  std::size_t require_index(const std::string& label) const;

  friend bool operator==(const GraphState& a, const GraphState& b);

 private:
  std::vector<RowState> rows_;
  Mode mode_ = Mode::kBosonic;
  Orientation orientation_ = Orientation::kUndirected;
  std::vector<std::string> labels_;
};

/// Labels "1", "2", ..., "n".
std::vector<std::string> default_labels(std::size_t n);

/// Encodes every matrix row as a normalized Fock state. Throws kSymmetry,
/// kExclusion, kLoop or kLabel when the matrix or labels do not fit the
/// requested mode and orientation.
GraphState from_adjacency(const AdjacencyMatrix& matrix, Mode mode,
                          Orientation orientation,
                          std::optional<std::vector<std::string>> labels = {});

AdjacencyMatrix to_adjacency(const GraphState& graph);

/// Sorted vertex indices adjacent to m. In a directed graph this is the
/// union of out-neighbours and in-neighbours.
std::vector<std::size_t> neighbors(const GraphState& graph, std::size_t m);

/// n_{i,j}.
Occupation edge_multiplicity(const GraphState& graph, std::size_t i,
                             std::size_t j);

enum class InvariantKind {
  kShape,
  kLabelCount,
  kDuplicateLabel,
  kZeroRow,
  kNotNormalized,
  kLoop,
  kExclusion,
  kSymmetry,
};

struct Violation {
  InvariantKind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every broken invariant, in row-major order. Empty iff the state is valid.
/// Never throws on malformed input.
std::vector<Violation> validate(const GraphState& graph);

}  // namespace fockgraph
