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

#include <string>
#include <utility>
#include <vector>

#include "fockgraph/edge_ops.hpp"
#include "fockgraph/errors.hpp"

namespace fockgraph {

namespace {

void require_positive(Occupation d) {
  if (d == 0) raise(ErrorKind::kInvalidDimension, "edge count must be >= 1");
}

void require_pair(const GraphState& graph, std::size_t i, std::size_t j) {
  if (i >= graph.size() || j >= graph.size()) {
    raise(ErrorKind::kIndex, "vertex pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") out of range");
  }
  if (i == j) {
    raise(ErrorKind::kLoop,
          "loops are not allowed (vertex \"" + graph.label(i) + "\")");
  }
}

std::string edge_text(const GraphState& graph, std::size_t i, std::size_t j) {
  return "\"" + graph.label(i) + "\"" +
         (is_undirected(graph.orientation()) ? "--" : "->") + "\"" +
         graph.label(j) + "\"";
}

GraphState replace_rows(const GraphState& graph,
                        std::vector<std::pair<std::size_t, RowState>> updates) {
  std::vector<RowState> rows = graph.rows();
  for (auto& [index, row] : updates) rows[index] = std::move(row);
  return GraphState::unchecked(std::move(rows), graph.mode(),
                               graph.orientation(), graph.labels());
}

}  // namespace

RowApplication de_apply_row_traced(const RowState& state, std::size_t j,
                                   Occupation d) {
  const Occupation k = state[j];
  if (d > k) {
    raise(ErrorKind::kInsufficientEdges,
          "cannot remove " + std::to_string(d) + " edge(s) from mode " +
              std::to_string(j) + " holding " + std::to_string(k));
  }
  RowState raw = apply_annihilation(state, j, d);
  Amplitude raw_amplitude = raw.amplitude();
  const Amplitude prefactor = Amplitude::from_squared(lowering_prefactor(k, d));
  RowState result(raw.occupations(), raw_amplitude / prefactor);
  return {std::move(result), std::move(raw_amplitude)};
}

RowState de_apply_row(const RowState& state, std::size_t j, Occupation d) {
  return de_apply_row_traced(state, j, d).state;
}

RowApplication ae_apply_row_traced(const RowState& state, std::size_t j,
                                   Occupation d, Mode mode) {
  const Occupation k = state[j];
  if (is_fermionic(mode) && k + d > 1) {
    raise(ErrorKind::kExclusion,
          "fermionic mode " + std::to_string(j) + " holding " +
              std::to_string(k) + " cannot take " + std::to_string(d) +
              " more");
  }
  RowState raw = apply_creation(state, j, d, mode);
  Amplitude raw_amplitude = raw.amplitude();
  const Amplitude prefactor = Amplitude::from_squared(raising_prefactor(k, d));
  RowState result(raw.occupations(), raw_amplitude / prefactor);
  return {std::move(result), std::move(raw_amplitude)};
}

RowState ae_apply_row(const RowState& state, std::size_t j, Occupation d,
                      Mode mode) {
  return ae_apply_row_traced(state, j, d, mode).state;
}

GraphState delete_edges(const GraphState& graph, std::size_t i, std::size_t j,
                        Occupation d) {
  require_pair(graph, i, j);
  require_positive(d);
  const bool both = is_undirected(graph.orientation());
  const Occupation forward = graph.rows()[i][j];
  const Occupation backward = graph.rows()[j][i];
  if (d > forward || (both && d > backward)) {
    raise(ErrorKind::kInsufficientEdges,
          "cannot remove " + std::to_string(d) + " edge(s) from " +
              edge_text(graph, i, j) + " with multiplicity " +
              std::to_string(forward));
  }
  std::vector<std::pair<std::size_t, RowState>> updates;
  updates.emplace_back(i, de_apply_row(graph.rows()[i], j, d));
  if (both) updates.emplace_back(j, de_apply_row(graph.rows()[j], i, d));
  return replace_rows(graph, std::move(updates));
}

GraphState add_edges(const GraphState& graph, std::size_t i, std::size_t j,
                     Occupation d) {
  require_pair(graph, i, j);
  require_positive(d);
  const bool both = is_undirected(graph.orientation());
  if (is_fermionic(graph.mode())) {
    const Occupation forward = graph.rows()[i][j];
    const Occupation backward = graph.rows()[j][i];
    if (forward + d > 1 || (both && backward + d > 1)) {
      raise(ErrorKind::kExclusion,
            "simple graph cannot hold " + std::to_string(forward + d) +
                " edges on " + edge_text(graph, i, j));
    }
  }
  std::vector<std::pair<std::size_t, RowState>> updates;
  updates.emplace_back(i, ae_apply_row(graph.rows()[i], j, d, graph.mode()));
  if (both) {
    updates.emplace_back(j, ae_apply_row(graph.rows()[j], i, d, graph.mode()));
  }
  return replace_rows(graph, std::move(updates));
}

GraphState apply(const GraphState& graph, const EdgeOpSpec& op) {
  return op.kind == EdgeOpKind::kCreate
             ? add_edges(graph, op.source, op.target, op.count)
             : delete_edges(graph, op.source, op.target, op.count);
}

}  // namespace fockgraph
