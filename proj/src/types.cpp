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

#include "fockgraph/errors.hpp"
#include "fockgraph/types.hpp"

namespace fockgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kZeroState: return "zero-state";
    case ErrorKind::kCannotNormalize: return "cannot-normalize";
    case ErrorKind::kExclusion: return "exclusion";
    case ErrorKind::kSymmetry: return "symmetry";
    case ErrorKind::kLoop: return "loop";
    case ErrorKind::kLabel: return "label";
    case ErrorKind::kInsufficientEdges: return "insufficient-edges";
    case ErrorKind::kInputParse: return "input-parse";
    case ErrorKind::kScriptParse: return "script-parse";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kUsage: return "usage";
  }
  return "unknown";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::kFermionic ? "fermion" : "boson";
}

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::kDirected ? "directed" : "undirected";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "fermion") return Mode::kFermionic;
  if (text == "boson") return Mode::kBosonic;
  return std::nullopt;
}

std::optional<Orientation> parse_orientation(std::string_view text) {
  if (text == "directed") return Orientation::kDirected;
  if (text == "undirected") return Orientation::kUndirected;
  return std::nullopt;
}

}  // namespace fockgraph
