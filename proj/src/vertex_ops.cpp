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
#include <string>
#include <utility>
#include <vector>

#include "fockgraph/edge_ops.hpp"
#include "fockgraph/errors.hpp"
#include "fockgraph/vertex_ops.hpp"

namespace fockgraph {

namespace {

void require_vertex(const GraphState& graph, std::size_t m) {
  if (m >= graph.size()) {
    raise(ErrorKind::kIndex, "vertex index " + std::to_string(m) +
                                 " out of range for " +
                                 std::to_string(graph.size()) + " vertices");
  }
}

Occupations without(const Occupations& row, Eigen::Index m) {
  Occupations out(row.size() - 1);
  out << row.head(m), row.tail(row.size() - m - 1);
  return out;
}

}  // namespace

GraphState add_vertex(const GraphState& graph, const std::string& label) {
  if (label.empty()) raise(ErrorKind::kLabel, "empty vertex label");
  if (graph.index_of(label)) {
    raise(ErrorKind::kLabel, "vertex label \"" + label + "\" already exists");
  }
  const auto n = static_cast<Eigen::Index>(graph.size());
  std::vector<RowState> rows;
  rows.reserve(graph.size() + 1);
  for (const RowState& row : graph.rows()) {
    Occupations extended(n + 1);
    extended << row.occupations(), 0;
    rows.emplace_back(std::move(extended), row.amplitude());
  }
  rows.push_back(vacuum(graph.size() + 1));
  std::vector<std::string> labels = graph.labels();
  labels.push_back(label);
  return GraphState::unchecked(std::move(rows), graph.mode(),
                               graph.orientation(), std::move(labels));
}

CleanedRow clean_row(const GraphState& graph, std::size_t m) {
  require_vertex(graph, m);
  RowState state = graph.rows()[m];
  for (std::size_t j = 0; j < graph.size(); ++j) {
    const Occupation n = state[j];
    if (n > 0) state = apply_annihilation(state, j, n);
  }
  Amplitude raw = state.amplitude();
  return {normalize(state), std::move(raw)};
}

GraphState clean_neighbor_entries(const GraphState& graph, std::size_t m) {
  require_vertex(graph, m);
  std::vector<RowState> rows = graph.rows();
  for (std::size_t j = 0; j < graph.size(); ++j) {
    if (j == m) continue;
    const Occupation n = rows[j][m];
    if (n > 0) rows[j] = de_apply_row(rows[j], m, n);
  }
  return GraphState::unchecked(std::move(rows), graph.mode(),
                               graph.orientation(), graph.labels());
}

GraphState delete_vertex(const GraphState& graph, std::size_t m) {
  require_vertex(graph, m);
  // Row m is washed to the vacuum and the entries pointing at m are lowered
  // to zero; only then are row m and mode m dropped.
  const CleanedRow emptied = clean_row(graph, m);
  std::vector<RowState> cleaned = clean_neighbor_entries(graph, m).rows();
  cleaned[m] = emptied.row;

  const auto index = static_cast<Eigen::Index>(m);
  std::vector<RowState> rows;
  std::vector<std::string> labels;
  rows.reserve(graph.size() - 1);
  labels.reserve(graph.size() - 1);
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (i == m) continue;
    const RowState& row = cleaned[i];
    rows.emplace_back(without(row.occupations(), index), row.amplitude());
    labels.push_back(graph.labels()[i]);
  }
  return GraphState::unchecked(std::move(rows), graph.mode(),
                               graph.orientation(), std::move(labels));
}

std::pair<GraphState, ContractionReport> contract(const GraphState& graph,
                                                  std::size_t i,
                                                  std::size_t j) {
  require_vertex(graph, i);
  require_vertex(graph, j);
  if (i == j) {
    raise(ErrorKind::kLoop,
          "cannot contract vertex \"" + graph.label(i) + "\" with itself");
  }

  ContractionReport report;
  report.kept = graph.label(i);
  report.removed = graph.label(j);

  // Capture before deletion; labels survive the index shift.
  struct Pending {
    std::string neighbor;
    Occupation out = 0;  // n_{j,m}
    Occupation in = 0;   // n_{m,j}
  };
  std::vector<Pending> pending;
  for (std::size_t m : neighbors(graph, j)) {
    if (m == i) continue;
    pending.push_back({graph.label(m), graph.rows()[j][m], graph.rows()[m][j]});
  }

  GraphState result = delete_vertex(graph, j);
  const std::size_t kept = result.require_index(report.kept);
  const bool undirected = is_undirected(graph.orientation());
  const bool simple = is_fermionic(graph.mode());

  auto attach = [&](std::size_t from, std::size_t to, Occupation count,
                    TransferDirection direction, const std::string& neighbor) {
    if (count == 0) return;
    Occupation d = count;
    if (simple) {
      if (result.rows()[from][to] >= 1) {
        if (std::find(report.saturated.begin(), report.saturated.end(),
                      neighbor) == report.saturated.end()) {
          report.saturated.push_back(neighbor);
        }
        return;
      }
      d = 1;
    }
    result = add_edges(result, from, to, d);
    report.transferred.push_back({neighbor, d, direction});
  };

  for (const Pending& p : pending) {
    const std::size_t m = result.require_index(p.neighbor);
    if (undirected) {
      attach(kept, m, p.out, TransferDirection::kUndirected, p.neighbor);
    } else {
      attach(kept, m, p.out, TransferDirection::kOutgoing, p.neighbor);
      attach(m, kept, p.in, TransferDirection::kIncoming, p.neighbor);
    }
  }
  return {std::move(result), std::move(report)};
}

}  // namespace fockgraph
