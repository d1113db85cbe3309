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

#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "fockgraph/edge_ops.hpp"
#include "fockgraph/errors.hpp"
#include "fockgraph/graph_io.hpp"
#include "fockgraph/script.hpp"
#include "fockgraph/vertex_ops.hpp"

namespace fockgraph {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  raise(ErrorKind::kInputParse,
        "input line " + std::to_string(line) + ": " + message);
}

bool parse_entry(std::string_view token, Occupation& out) {
  if (token == "0") {
    out = 0;
    return true;
  }
  return parse_count(token, out);
}

struct Header {
  Mode mode;
  Orientation orientation;
  std::size_t n;
  std::vector<std::string> labels;
};

Header parse_header(const std::vector<std::string>& lines) {
  if (lines.empty()) fail(1, "missing header");
  const auto head = split_tokens(lines[0]);
  if (head.size() != 4 || head[0] != "graph") {
    fail(1, "expected \"graph <mode> <orientation> <n>\"");
  }
  const auto mode = parse_mode(head[1]);
  if (!mode) fail(1, "unknown mode \"" + head[1] + "\"");
  const auto orientation = parse_orientation(head[2]);
  if (!orientation) fail(1, "unknown orientation \"" + head[2] + "\"");
  Occupation n = 0;
  if (!parse_entry(head[3], n)) fail(1, "bad vertex count \"" + head[3] + "\"");

  std::vector<std::string> labels =
      lines.size() > 1 ? split_tokens(lines[1]) : std::vector<std::string>{};
  if (lines.size() < 2 && n > 0) fail(2, "missing label line");
  if (labels.size() != n) {
    fail(2, "expected " + std::to_string(n) + " labels, got " +
                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) fail(2, "duplicate label \"" + label + "\"");
  }
  return {*mode, *orientation, n, std::move(labels)};
}

GraphState parse_matrix_body(const std::vector<std::string>& lines,
                             const Header& header) {
  const auto n = static_cast<Eigen::Index>(header.n);
  AdjacencyMatrix matrix = AdjacencyMatrix::Zero(n, n);
  Eigen::Index row = 0;
  for (std::size_t index = 2; index < lines.size(); ++index) {
    const std::size_t line_no = index + 1;
    const auto tokens = split_tokens(lines[index]);
    if (tokens.empty()) continue;
    if (row == n) fail(line_no, "more than " + std::to_string(n) + " matrix rows");
    if (static_cast<Eigen::Index>(tokens.size()) != n) {
      fail(line_no, "expected " + std::to_string(n) + " entries, got " +
                        std::to_string(tokens.size()));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      Occupation value = 0;
      if (!parse_entry(tokens[static_cast<std::size_t>(j)], value)) {
        fail(line_no, "bad entry \"" + tokens[static_cast<std::size_t>(j)] + "\"");
      }
      if (j == row && value != 0) fail(line_no, "nonzero diagonal entry (loop)");
      if (is_fermionic(header.mode) && value > 1) {
        fail(line_no, "fermion graph entry " + std::to_string(value) + " > 1");
      }
      matrix(row, j) = value;
    }
    if (is_undirected(header.orientation)) {
      for (Eigen::Index j = 0; j < row; ++j) {
        if (matrix(row, j) != matrix(j, row)) {
          fail(line_no, "undirected matrix is asymmetric at column " +
                            std::to_string(j + 1));
        }
      }
    }
    ++row;
  }
  if (row != n) {
    fail(lines.size(), "expected " + std::to_string(n) + " matrix rows, got " +
                           std::to_string(row));
  }
  return from_adjacency(matrix, header.mode, header.orientation, header.labels);
}

GraphState parse_edge_body(const std::vector<std::string>& lines,
                           const Header& header) {
  GraphState graph = from_adjacency(AdjacencyMatrix(0, 0), header.mode,
                                    header.orientation, std::vector<std::string>{});
  for (const auto& label : header.labels) graph = add_vertex(graph, label);

  for (std::size_t index = 2; index < lines.size(); ++index) {
    const std::size_t line_no = index + 1;
    const auto tokens = split_tokens(lines[index]);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      fail(line_no, "expected \"u v [mult]\"");
    }
    Occupation mult = 1;
    if (tokens.size() == 3 && !parse_count(tokens[2], mult)) {
      fail(line_no, "multiplicity must be an integer in [1, " +
                        std::to_string(kMaxCount) + "], got \"" + tokens[2] +
                        "\"");
    }
    const auto u = graph.index_of(tokens[0]);
    const auto v = graph.index_of(tokens[1]);
    if (!u) fail(line_no, "undeclared vertex \"" + tokens[0] + "\"");
    if (!v) fail(line_no, "undeclared vertex \"" + tokens[1] + "\"");
    try {
      graph = add_edges(graph, *u, *v, mult);
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
  }
  return graph;
}

}  // namespace

std::optional<GraphFormat> parse_format(std::string_view text) {
  if (text == "matrix") return GraphFormat::kMatrix;
  if (text == "edges") return GraphFormat::kEdges;
  return std::nullopt;
}

GraphState parse_graph_file(std::string_view text, GraphFormat format) {
  const std::vector<std::string> lines = split_lines(text);
  const Header header = parse_header(lines);
  return format == GraphFormat::kMatrix ? parse_matrix_body(lines, header)
                                        : parse_edge_body(lines, header);
}

std::string write_matrix(const GraphState& graph) {
  std::ostringstream out;
  out << "graph " << to_string(graph.mode()) << ' '
      << to_string(graph.orientation()) << ' ' << graph.size() << '\n';
  for (std::size_t i = 0; i < graph.labels().size(); ++i) {
    out << (i ? " " : "") << graph.labels()[i];
  }
  out << '\n';
  for (const RowState& row : graph.rows()) {
    const Occupations& occ = row.occupations();
    for (Eigen::Index j = 0; j < occ.size(); ++j) {
      out << (j ? " " : "") << occ(j);
    }
    out << '\n';
  }
  return out.str();
}

std::string dump_state(const GraphState& graph) {
  std::ostringstream out;
  out << "vertices=" << graph.size() << '\n';
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const RowState& row = graph.rows()[i];
    out << graph.labels()[i] << " |";
    const Occupations& occ = row.occupations();
    for (Eigen::Index j = 0; j < occ.size(); ++j) {
      out << (j ? "," : "") << occ(j);
    }
    out << "> amp2=" << row.amplitude().to_string() << '\n';
  }
  return out.str();
}

}  // namespace fockgraph
