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

#include "fockgraph/graph_state.hpp"
#include "fockgraph/oracle.hpp"

namespace fockgraph {

/// True iff labels, dimensions, mode/orientation flags and every entry agree
/// and every Fock row has unit squared amplitude.
bool equivalent(const oracle::OracleGraph& classical, const GraphState& state);

/// Oracle graph with the same matrix, flags and labels as `state`.
oracle::OracleGraph to_oracle(const GraphState& state);

}  // namespace fockgraph
