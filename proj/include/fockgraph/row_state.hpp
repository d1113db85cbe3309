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

#include <cstddef>
#include <span>

#include "fockgraph/amplitude.hpp"
#include "fockgraph/types.hpp"

namespace fockgraph {

/// One vertex's Fock basis state |n_1, ..., n_|V|> with an exact amplitude.
///
/// A RowState is either a scaled basis state or the zero vector of the space
/// (`is_zero()`), which is what ladder operators produce when they annihilate
/// past the vacuum or violate exclusion. The zero vector is not the vacuum:
/// its occupations are undefined and reading them throws kZeroState.
class RowState {
 public:
  /// Zero-length vacuum; used only by empty containers.
  RowState() = default;
  RowState(Occupations occupations, Amplitude amplitude);

  /// The zero vector of a space of `length` modes.
  static RowState zero(std::size_t length);

  std::size_t size() const { return length_; }
  bool is_zero() const { return zero_; }
  bool is_normalized() const { return !zero_ && amplitude_.is_unit(); }

  const Amplitude& amplitude() const { return amplitude_; }
  const Occupations& occupations() const;
  Occupation operator[](std::size_t j) const;

  friend bool operator==(const RowState& a, const RowState& b);

 private:
  Occupations occupations_;
  Amplitude amplitude_;
  std::size_t length_ = 0;
  bool zero_ = false;
};

/// |0, ..., 0> with unit amplitude. Throws kInvalidDimension for length 0.
RowState vacuum(std::size_t length);

/// (a_j^+)^d applied to `state`: occupation j grows by d and the squared
/// amplitude picks up (k+d)!/k!. Fermionic overflow gives the zero vector.
RowState apply_creation(const RowState& state, std::size_t j, Occupation d,
                        Mode mode);

/// (a_j)^d applied to `state`: occupation j shrinks by d and the squared
/// amplitude picks up k!/(k-d)!. Lowering past the vacuum gives the zero
/// vector.
RowState apply_annihilation(const RowState& state, std::size_t j,
                            Occupation d);

/// The unnormalized product of creation operators on the vacuum,
/// prod_j (a_j^+)^{n_j} |0>, whose squared amplitude is prod_j n_j!.
RowState raw_row_from_vacuum(std::span<const Occupation> occupations,
                             Mode mode);

/// Normalized basis state with the given occupations. Builds the raw product
/// state, checks its squared amplitude against prod_j n_j!, then divides the
/// factor out.
RowState build_row_from_occupations(std::span<const Occupation> occupations,
                                    Mode mode);

/// Same occupations, unit amplitude. Throws kCannotNormalize on the zero vector.
RowState normalize(const RowState& state);

}  // namespace fockgraph
