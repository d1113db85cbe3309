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

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "fockgraph/errors.hpp"
#include "fockgraph/graph_state.hpp"

namespace fockgraph {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_vertex(const GraphState& graph, std::size_t m) {
  if (m >= graph.size()) {
    raise(ErrorKind::kIndex, "vertex index " + std::to_string(m) +
                                 " out of range for " +
                                 std::to_string(graph.size()) + " vertices");
  }
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    raise(ErrorKind::kLabel, "expected " + std::to_string(n) +
                                 " labels, got " +
                                 std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) raise(ErrorKind::kLabel, "empty vertex label");
    if (!seen.insert(label).second) {
      raise(ErrorKind::kLabel, "duplicate vertex label \"" + label + "\"");
    }
  }
}

}  // namespace

GraphState GraphState::unchecked(std::vector<RowState> rows, Mode mode,
                                 Orientation orientation,
                                 std::vector<std::string> labels) {
  GraphState g;
  g.rows_ = std::move(rows);
  g.mode_ = mode;
  g.orientation_ = orientation;
  g.labels_ = std::move(labels);
  return g;
}

const RowState& GraphState::row(std::size_t i) const {
  require_vertex(*this, i);
  return rows_[i];
}

const std::string& GraphState::label(std::size_t i) const {
  require_vertex(*this, i);
  return labels_.at(i);
}

std::optional<std::size_t> GraphState::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t GraphState::require_index(const std::string& label) const {
  if (auto index = index_of(label)) return *index;
  raise(ErrorKind::kLabel, "unknown vertex label \"" + label + "\"");
}

bool operator==(const GraphState& a, const GraphState& b) {
  return a.mode_ == b.mode_ && a.orientation_ == b.orientation_ &&
         a.labels_ == b.labels_ && a.rows_ == b.rows_;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

GraphState from_adjacency(const AdjacencyMatrix& matrix, Mode mode,
                          Orientation orientation,
                          std::optional<std::vector<std::string>> labels) {
  if (matrix.rows() != matrix.cols()) {
    raise(ErrorKind::kInvalidDimension, "adjacency matrix is not square");
  }
  const auto n = static_cast<std::size_t>(matrix.rows());
  std::vector<std::string> names = labels ? std::move(*labels) : default_labels(n);
  check_labels(names, n);

  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    if (matrix(i, i) != 0) {
      raise(ErrorKind::kLoop, "nonzero diagonal entry at " + pair_text(i, i));
    }
  }
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (is_undirected(orientation) && matrix(i, j) != matrix(j, i)) {
        raise(ErrorKind::kSymmetry,
              "undirected matrix is asymmetric at " + pair_text(i, j));
      }
      if (is_fermionic(mode) && matrix(i, j) > 1) {
        raise(ErrorKind::kExclusion, "fermionic entry " +
                                         std::to_string(matrix(i, j)) +
                                         " at " + pair_text(i, j));
      }
    }
  }

  std::vector<RowState> rows;
  rows.reserve(n);
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    const Occupations occupations = matrix.row(i);
    rows.push_back(build_row_from_occupations(
        std::span<const Occupation>(occupations.data(), n), mode));
  }
  return GraphState::unchecked(std::move(rows), mode, orientation,
                               std::move(names));
}

AdjacencyMatrix to_adjacency(const GraphState& graph) {
  const auto n = static_cast<Eigen::Index>(graph.size());
  AdjacencyMatrix matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    matrix.row(i) = graph.rows()[static_cast<std::size_t>(i)].occupations();
  }
  return matrix;
}

std::vector<std::size_t> neighbors(const GraphState& graph, std::size_t m) {
  require_vertex(graph, m);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < graph.size(); ++j) {
    if (j == m) continue;
    const bool outgoing = graph.rows()[m][j] > 0;
    const bool incoming = graph.rows()[j][m] > 0;
    if (outgoing || (!is_undirected(graph.orientation()) && incoming)) {
      out.push_back(j);
    }
  }
  return out;
}

Occupation edge_multiplicity(const GraphState& graph, std::size_t i,
                             std::size_t j) {
  require_vertex(graph, i);
  require_vertex(graph, j);
  return graph.rows()[i][j];
}

std::vector<Violation> validate(const GraphState& graph) {
  std::vector<Violation> out;
  const std::size_t n = graph.size();

  if (graph.labels().size() != n) {
    out.push_back({InvariantKind::kLabelCount, 0, 0,
                   "label count " + std::to_string(graph.labels().size()) +
                       " != vertex count " + std::to_string(n)});
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < graph.labels().size(); ++i) {
    if (!seen.insert(graph.labels()[i]).second) {
      out.push_back({InvariantKind::kDuplicateLabel, i, i,
                     "duplicate label \"" + graph.labels()[i] + "\""});
    }
  }

  bool square = true;
  for (std::size_t i = 0; i < n; ++i) {
    const RowState& row = graph.rows()[i];
    if (row.size() != n) {
      square = false;
      out.push_back({InvariantKind::kShape, i, i,
                     "row " + std::to_string(i) + " has length " +
                         std::to_string(row.size())});
    }
    if (row.is_zero()) {
      square = false;
      out.push_back({InvariantKind::kZeroRow, i, i,
                     "row " + std::to_string(i) + " is the zero vector"});
    } else if (!row.amplitude().is_unit()) {
      out.push_back({InvariantKind::kNotNormalized, i, i,
                     "row " + std::to_string(i) + " has amp2=" +
                         row.amplitude().to_string()});
    }
  }
  // Entry-level checks need every row readable with the right length.
  if (!square) return out;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Occupation value = graph.rows()[i][j];
      if (i == j && value != 0) {
        out.push_back({InvariantKind::kLoop, i, j,
                       "loop at " + pair_text(i, j)});
      }
      if (is_fermionic(graph.mode()) && value > 1) {
        out.push_back({InvariantKind::kExclusion, i, j,
                       "exclusion violated at " + pair_text(i, j)});
      }
      if (is_undirected(graph.orientation()) && i < j &&
          value != graph.rows()[j][i]) {
        out.push_back({InvariantKind::kSymmetry, i, j,
                       "symmetry violated at " + pair_text(i, j)});
      }
    }
  }
  return out;
}

}  // namespace fockgraph
