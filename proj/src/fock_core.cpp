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

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "fockgraph/amplitude.hpp"
#include "fockgraph/errors.hpp"
#include "fockgraph/row_state.hpp"

namespace fockgraph {

namespace {

void require_index(const RowState& state, std::size_t j) {
  if (j >= state.size()) {
    raise(ErrorKind::kIndex, "mode index " + std::to_string(j) +
                                 " out of range for row of length " +
                                 std::to_string(state.size()));
  }
}

void require_nonzero(const RowState& state) {
  if (state.is_zero()) {
    raise(ErrorKind::kZeroState, "ladder operator applied to the zero vector");
  }
}

}  // namespace

// Amplitude --------------------------------------------------------------

Amplitude Amplitude::from_squared(Rational squared) {
  if (squared < 0) {
    raise(ErrorKind::kCannotNormalize, "negative squared amplitude");
  }
  return Amplitude(std::move(squared));
}

double Amplitude::magnitude() const {
  return std::sqrt(squared_.convert_to<double>());
}

std::string Amplitude::to_string() const { return squared_.str(); }

Amplitude operator/(const Amplitude& lhs, const Amplitude& rhs) {
  if (rhs.is_zero()) {
    raise(ErrorKind::kCannotNormalize, "division by a zero amplitude");
  }
  return Amplitude(lhs.squared_ / rhs.squared_);
}

Integer factorial(Occupation n) {
  static std::mutex mutex;
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    table.push_back(table.back() * Integer(table.size()));
  }
  return table[n];
}

Rational raising_prefactor(Occupation k, Occupation d) {
  return Rational(factorial(k + d)) / Rational(factorial(k));
}

Rational lowering_prefactor(Occupation k, Occupation d) {
  if (d > k) {
    raise(ErrorKind::kInsufficientEdges, "lowering prefactor with d > k");
  }
  return Rational(factorial(k)) / Rational(factorial(k - d));
}

// RowState ---------------------------------------------------------------

RowState::RowState(Occupations occupations, Amplitude amplitude)
    : occupations_(std::move(occupations)),
      amplitude_(std::move(amplitude)),
      length_(static_cast<std::size_t>(occupations_.size())),
      zero_(amplitude_.is_zero()) {}

RowState RowState::zero(std::size_t length) {
  RowState s;
  s.length_ = length;
  s.amplitude_ = Amplitude::zero();
  s.zero_ = true;
  return s;
}

const Occupations& RowState::occupations() const {
  require_nonzero(*this);
  return occupations_;
}

Occupation RowState::operator[](std::size_t j) const {
  require_nonzero(*this);
  require_index(*this, j);
  return occupations_(static_cast<Eigen::Index>(j));
}

bool operator==(const RowState& a, const RowState& b) {
  if (a.length_ != b.length_ || a.zero_ != b.zero_) return false;
  if (a.zero_) return true;
  return a.amplitude_ == b.amplitude_ &&
         equal_matrices(a.occupations_, b.occupations_);
}

RowState vacuum(std::size_t length) {
  if (length == 0) {
    raise(ErrorKind::kInvalidDimension, "vacuum state needs at least one mode");
  }
  return RowState(Occupations::Zero(static_cast<Eigen::Index>(length)),
                  Amplitude::one());
}

RowState apply_creation(const RowState& state, std::size_t j, Occupation d,
                        Mode mode) {
  require_index(state, j);
  require_nonzero(state);
  const Occupation k = state[j];
  if (is_fermionic(mode) && k + d > 1) return RowState::zero(state.size());
  Occupations next = state.occupations();
  next(static_cast<Eigen::Index>(j)) = k + d;
  return RowState(std::move(next),
                  state.amplitude() *
                      Amplitude::from_squared(raising_prefactor(k, d)));
}

RowState apply_annihilation(const RowState& state, std::size_t j,
                            Occupation d) {
  require_index(state, j);
  require_nonzero(state);
  const Occupation k = state[j];
  if (d > k) return RowState::zero(state.size());
  Occupations next = state.occupations();
  next(static_cast<Eigen::Index>(j)) = k - d;
  return RowState(std::move(next),
                  state.amplitude() *
                      Amplitude::from_squared(lowering_prefactor(k, d)));
}

RowState raw_row_from_vacuum(std::span<const Occupation> occupations,
                             Mode mode) {
  RowState state = vacuum(occupations.size());
  for (std::size_t j = 0; j < occupations.size(); ++j) {
    if (occupations[j] == 0) continue;
    if (is_fermionic(mode) && occupations[j] > 1) {
      raise(ErrorKind::kExclusion,
            "fermionic occupation " + std::to_string(occupations[j]) +
                " at mode " + std::to_string(j));
    }
    state = apply_creation(state, j, occupations[j], mode);
  }
  return state;
}

RowState build_row_from_occupations(std::span<const Occupation> occupations,
                                    Mode mode) {
  RowState raw = raw_row_from_vacuum(occupations, mode);
  Rational expected(1);
  for (Occupation n : occupations) expected *= Rational(factorial(n));
  if (raw.amplitude().squared() != expected) {
    throw std::logic_error("raw construction amplitude mismatch: got " +
                           raw.amplitude().to_string() + ", expected " +
                           expected.str());
  }
  return normalize(raw);
}

RowState normalize(const RowState& state) {
  if (state.is_zero()) {
    raise(ErrorKind::kCannotNormalize, "the zero vector cannot be normalized");
  }
  return RowState(state.occupations(), Amplitude::one());
}

}  // namespace fockgraph
