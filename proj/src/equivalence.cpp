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

#include "fockgraph/equivalence.hpp"

namespace fockgraph {

bool equivalent(const oracle::OracleGraph& classical, const GraphState& state) {
  if (classical.labels != state.labels()) return false;
  if (classical.simple != is_fermionic(state.mode())) return false;
  if (classical.directed == is_undirected(state.orientation())) return false;
  const auto n = static_cast<Eigen::Index>(state.size());
  if (classical.matrix.rows() != n || classical.matrix.cols() != n) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const RowState& row = state.rows()[static_cast<std::size_t>(i)];
    if (row.is_zero() || !row.amplitude().is_unit()) return false;
    if (static_cast<Eigen::Index>(row.size()) != n) return false;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (classical.matrix(i, j) !=
          static_cast<std::int64_t>(row[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

oracle::OracleGraph to_oracle(const GraphState& state) {
  return oracle::make_graph(to_adjacency(state).cast<std::int64_t>(),
                            is_fermionic(state.mode()),
                            !is_undirected(state.orientation()), state.labels());
}

}  // namespace fockgraph
