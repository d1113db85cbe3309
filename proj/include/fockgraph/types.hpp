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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace fockgraph {

/// Edge multiplicity between two vertices, i.e. the occupation number of
/// the single-particle mode that encodes the pair.
using Occupation = std::uint32_t;

/// One row of occupation numbers.
using Occupations = Eigen::Matrix<Occupation, 1, Eigen::Dynamic>;

/// |V| x |V| matrix of edge multiplicities.
template <typename Scalar>
using AdjacencyMatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using AdjacencyMatrix = AdjacencyMatrixX<Occupation>;

/// Fermionic modes hold at most one particle (simple graphs); bosonic modes
/// are unbounded (multigraphs).
enum class Mode { kFermionic, kBosonic };

enum class Orientation { kDirected, kUndirected };

std::string_view to_string(Mode mode);
std::string_view to_string(Orientation orientation);
std::optional<Mode> parse_mode(std::string_view text);
std::optional<Orientation> parse_orientation(std::string_view text);

inline bool is_fermionic(Mode mode) { return mode == Mode::kFermionic; }
inline bool is_undirected(Orientation o) { return o == Orientation::kUndirected; }

template <typename A, typename B>
bool equal_matrices(const Eigen::MatrixBase<A>& a,
                    const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

}  // namespace fockgraph
