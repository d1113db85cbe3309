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

#include <stdexcept>
#include <string>

#include "fockgraph/errors.hpp"
#include "fockgraph/oracle.hpp"

namespace fockgraph::oracle {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

Eigen::Index find_label(const OracleGraph& g, const std::string& label) {
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    if (g.labels[i] == label) return static_cast<Eigen::Index>(i);
  }
  raise(ErrorKind::kLabel, "oracle: unknown label " + label);
}

Matrix drop(const Matrix& m, Eigen::Index k) {
  const Eigen::Index n = m.rows();
  Matrix out(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == k) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == k) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

void bump(OracleGraph& g, Eigen::Index i, Eigen::Index j, std::int64_t delta) {
  g.matrix(i, j) += delta;
  if (!g.directed) g.matrix(j, i) += delta;
}

}  // namespace

OracleGraph make_graph(Matrix matrix, bool simple, bool directed,
                       std::vector<std::string> labels) {
  const Eigen::Index n = matrix.rows();
  if (matrix.cols() != n) raise(ErrorKind::kInvalidDimension, "oracle: not square");
  if (static_cast<Eigen::Index>(labels.size()) != n) {
    raise(ErrorKind::kLabel, "oracle: label count");
  }
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (labels[a].empty()) raise(ErrorKind::kLabel, "oracle: empty label");
    for (std::size_t b = 0; b < a; ++b) {
      if (labels[a] == labels[b]) raise(ErrorKind::kLabel, "oracle: duplicate label");
    }
  }
  if (matrix.diagonal().any()) raise(ErrorKind::kLoop, "oracle: loop");
  if (!directed && matrix != matrix.transpose()) {
    raise(ErrorKind::kSymmetry, "oracle: asymmetric");
  }
  if (simple && (matrix.array() > 1).any()) {
    raise(ErrorKind::kExclusion, "oracle: entry above 1");
  }
  if ((matrix.array() < 0).any()) raise(ErrorKind::kInputParse, "oracle: negative");
  return {std::move(matrix), simple, directed, std::move(labels)};
}

OracleGraph oracle_step(const OracleGraph& graph, const Command& command) {
  OracleGraph g = graph;
  switch (command.verb) {
    case Verb::kMatrix:
    case Verb::kDump:
      return g;

    case Verb::kAddVertex: {
      const std::string& label = command.labels.at(0);
      if (label.empty()) raise(ErrorKind::kLabel, "oracle: empty label");
      for (const auto& existing : g.labels) {
        if (existing == label) raise(ErrorKind::kLabel, "oracle: duplicate label");
      }
      const Eigen::Index n = g.matrix.rows();
      g.matrix.conservativeResize(n + 1, n + 1);
      g.matrix.row(n).setZero();
      g.matrix.col(n).setZero();
      g.labels.push_back(label);
      return g;
    }

    case Verb::kDeleteVertex: {
      const Eigen::Index m = find_label(g, command.labels.at(0));
      g.matrix = drop(g.matrix, m);
      g.labels.erase(g.labels.begin() + m);
      return g;
    }

    case Verb::kAddEdges:
    case Verb::kDeleteEdges: {
      const Eigen::Index i = find_label(g, command.labels.at(0));
      const Eigen::Index j = find_label(g, command.labels.at(1));
      if (i == j) raise(ErrorKind::kLoop, "oracle: loop");
      const auto d = static_cast<std::int64_t>(command.count);
      if (command.verb == Verb::kAddEdges) {
        if (g.simple && g.matrix(i, j) + d > 1) {
          raise(ErrorKind::kExclusion, "oracle: simple graph overflow");
        }
        bump(g, i, j, d);
      } else {
        if (g.matrix(i, j) < d) {
          raise(ErrorKind::kInsufficientEdges, "oracle: not enough edges");
        }
        bump(g, i, j, -d);
      }
      return g;
    }

    case Verb::kContract: {
      const Eigen::Index keep = find_label(g, command.labels.at(0));
      const Eigen::Index gone = find_label(g, command.labels.at(1));
      if (keep == gone) raise(ErrorKind::kLoop, "oracle: self contraction");
      // Vertex identification: fold row/column `gone` into `keep`, drop the
      // merged loop, then remove `gone`.
      Matrix& a = g.matrix;
      a.row(keep) += a.row(gone);
      a.col(keep) += a.col(gone);
      a(keep, keep) = 0;
      if (g.simple) a = a.cwiseMin(std::int64_t{1});
      a = drop(a, gone);
      g.labels.erase(g.labels.begin() + gone);
      return g;
    }
  }
  return g;
}

cpp_rational factorial_ratio(std::int64_t k, std::int64_t d, Ladder ladder) {
  if (k < 0 || d < 0) throw std::domain_error("factorial_ratio: negative argument");
  cpp_int product = 1;
  if (ladder == Ladder::kLowering) {
    if (d > k) throw std::domain_error("factorial_ratio: d > k");
    for (std::int64_t x = k; x > k - d; --x) product *= x;
  } else {
    for (std::int64_t x = k + 1; x <= k + d; ++x) product *= x;
  }
  return cpp_rational(product);
}

cpp_rational factorial_product(const std::vector<std::int64_t>& occupations) {
  cpp_int product = 1;
  for (std::int64_t n : occupations) {
    if (n < 0) throw std::domain_error("factorial_product: negative occupation");
    for (std::int64_t x = 2; x <= n; ++x) product *= x;
  }
  return cpp_rational(product);
}

}  // namespace fockgraph::oracle
