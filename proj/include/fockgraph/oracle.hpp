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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fockgraph/script.hpp"
#include "fockgraph/types.hpp"

// Classical reference implementation. Nothing here may include the Fock
// engine headers; the build links this library against fockgraph_base only.
namespace fockgraph::oracle {

using Matrix = AdjacencyMatrixX<std::int64_t>;

struct OracleGraph {
  Matrix matrix;
  bool simple = false;
  bool directed = false;
  std::vector<std::string> labels;
};

/// Validates like the Fock side and raises the same ErrorKind on failure.
OracleGraph make_graph(Matrix matrix, bool simple, bool directed,
                       std::vector<std::string> labels);

/// One script command by plain integer arithmetic on the matrix.
OracleGraph oracle_step(const OracleGraph& graph, const Command& command);

enum class Ladder { kLowering, kRaising };

/// k!/(k-d)! for kLowering, (k+d)!/k! for kRaising, by a direct product loop.
/// Throws std::domain_error when the ratio is undefined.
boost::multiprecision::cpp_rational factorial_ratio(std::int64_t k,
                                                    std::int64_t d,
                                                    Ladder ladder);

/// prod_j n_j! by direct multiplication.
boost::multiprecision::cpp_rational factorial_product(
    const std::vector<std::int64_t>& occupations);

}  // namespace fockgraph::oracle
