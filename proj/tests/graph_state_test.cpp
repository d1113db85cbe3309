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

#include <random>

#include <gtest/gtest.h>

#include "fockgraph/errors.hpp"
#include "fockgraph/graph_state.hpp"
#include "test_support.hpp"

namespace fockgraph {
namespace {

using testing::paw_graph;
using testing::paw_matrix;
using testing::matrix_of;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::kUsage;
}

RowState row(std::initializer_list<Occupation> values) {
  Occupations occ(static_cast<Eigen::Index>(values.size()));
  Eigen::Index j = 0;
  for (Occupation v : values) occ(j++) = v;
  return RowState(occ, Amplitude::one());
}

TEST(FromAdjacency, PawRows) {
  const GraphState g = paw_graph();
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.rows()[0], row({0, 1, 1, 1}));
  EXPECT_EQ(g.rows()[1], row({1, 0, 0, 0}));
  EXPECT_EQ(g.rows()[2], row({1, 0, 0, 1}));
  EXPECT_EQ(g.rows()[3], row({1, 0, 1, 0}));
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"1", "2", "3", "4"}));
  EXPECT_TRUE(validate(g).empty());
}

TEST(FromAdjacency, Singleton) {
  const GraphState g =
      from_adjacency(matrix_of({{0}}), Mode::kFermionic, Orientation::kUndirected);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.rows()[0], row({0}));
}

TEST(FromAdjacency, Errors) {
  EXPECT_EQ(kind_of([] {
              from_adjacency(matrix_of({{0, 2}, {2, 0}}), Mode::kFermionic,
                             Orientation::kUndirected);
            }),
            ErrorKind::kExclusion);
  EXPECT_EQ(kind_of([] {
              from_adjacency(matrix_of({{0, 1}, {0, 0}}), Mode::kBosonic,
                             Orientation::kUndirected);
            }),
            ErrorKind::kSymmetry);
  EXPECT_EQ(kind_of([] {
              from_adjacency(matrix_of({{1, 0}, {0, 0}}), Mode::kBosonic,
                             Orientation::kDirected);
            }),
            ErrorKind::kLoop);
  EXPECT_EQ(kind_of([] {
              from_adjacency(matrix_of({{0, 0}, {0, 0}}), Mode::kBosonic,
                             Orientation::kDirected,
                             std::vector<std::string>{"a", "a"});
            }),
            ErrorKind::kLabel);
  // A directed asymmetric matrix is fine.
  EXPECT_NO_THROW(from_adjacency(matrix_of({{0, 1}, {0, 0}}), Mode::kFermionic,
                                 Orientation::kDirected));
}

TEST(ToAdjacency, Examples) {
  EXPECT_TRUE(equal_matrices(to_adjacency(paw_graph()), paw_matrix()));
  const AdjacencyMatrix zero = AdjacencyMatrix::Zero(3, 3);
  EXPECT_TRUE(equal_matrices(
      to_adjacency(from_adjacency(zero, Mode::kBosonic, Orientation::kUndirected)),
      zero));
}

TEST(Neighbors, PawAndSingleton) {
  const GraphState g = paw_graph();
  EXPECT_EQ(neighbors(g, 0), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(neighbors(g, 1), (std::vector<std::size_t>{0}));
  const GraphState single =
      from_adjacency(matrix_of({{0}}), Mode::kBosonic, Orientation::kUndirected);
  EXPECT_TRUE(neighbors(single, 0).empty());
  EXPECT_EQ(kind_of([&] { neighbors(g, 4); }), ErrorKind::kIndex);
}

TEST(Neighbors, DirectedIsInUnionOut) {
  // 0 -> 1, 2 -> 0
  const GraphState g = from_adjacency(matrix_of({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}}),
                                      Mode::kFermionic, Orientation::kDirected);
  EXPECT_EQ(neighbors(g, 0), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(neighbors(g, 1), (std::vector<std::size_t>{0}));
}

TEST(EdgeMultiplicity, PawEntries) {
  const GraphState g = paw_graph();
  EXPECT_EQ(edge_multiplicity(g, 0, 1), 1u);
  EXPECT_EQ(edge_multiplicity(g, 1, 2), 0u);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(edge_multiplicity(g, i, i), 0u);
  EXPECT_EQ(kind_of([&] { edge_multiplicity(g, 0, 9); }), ErrorKind::kIndex);
}

TEST(Validate, ReportsViolations) {
  const GraphState asym = GraphState::unchecked(
      {row({0, 1}), row({0, 0})}, Mode::kBosonic, Orientation::kUndirected, {"a", "b"});
  const auto v = validate(asym);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, InvariantKind::kSymmetry);
  EXPECT_EQ(v[0].i, 0u);
  EXPECT_EQ(v[0].j, 1u);

  const GraphState crowded = GraphState::unchecked(
      {row({0, 2}), row({2, 0})}, Mode::kFermionic, Orientation::kUndirected, {"a", "b"});
  const auto w = validate(crowded);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].kind, InvariantKind::kExclusion);
  EXPECT_EQ(w[0].i, 0u);
  EXPECT_EQ(w[0].j, 1u);
}

TEST(Validate, TotalOnMalformedInput) {
  const GraphState bad = GraphState::unchecked(
      {row({0, 1, 0}), RowState::zero(2), RowState(row({3}).occupations(),
                                                   Amplitude::from_squared(6))},
      Mode::kFermionic, Orientation::kUndirected, {"x", "x"});
  std::vector<Violation> v;
  ASSERT_NO_THROW(v = validate(bad));
  auto has = [&](InvariantKind k) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == k; });
  };
  EXPECT_TRUE(has(InvariantKind::kLabelCount));
  EXPECT_TRUE(has(InvariantKind::kDuplicateLabel));
  EXPECT_TRUE(has(InvariantKind::kShape));
  EXPECT_TRUE(has(InvariantKind::kZeroRow));
  EXPECT_TRUE(has(InvariantKind::kNotNormalized));
  EXPECT_TRUE(validate(GraphState{}).empty());
}

TEST(RoundTrip, ExhaustiveSmallSimpleGraphs) {
  for (Eigen::Index n = 1; n <= 3; ++n) {
    const Eigen::Index cells = n * n;
    for (unsigned bits = 0; bits < (1u << cells); ++bits) {
      AdjacencyMatrix m(n, n);
      for (Eigen::Index c = 0; c < cells; ++c) m(c / n, c % n) = (bits >> c) & 1u;
      for (Orientation o : testing::kOrientations) {
        for (Mode mode : testing::kModes) {
          try {
            const GraphState g = from_adjacency(m, mode, o);
            EXPECT_TRUE(equal_matrices(to_adjacency(g), m));
            EXPECT_TRUE(validate(g).empty());
          } catch (const Error& e) {
            // Only invalid inputs may be rejected.
            const bool loop = m.diagonal().any();
            const bool asym = is_undirected(o) && m != m.transpose();
            EXPECT_TRUE(loop || asym) << e.what();
          }
        }
      }
    }
  }
}

TEST(RoundTrip, RandomMultigraphs) {
  std::mt19937_64 rng(0x5eed01);
  for (int trial = 0; trial < 300; ++trial) {
    for (Orientation o : testing::kOrientations) {
      for (Mode mode : testing::kModes) {
        std::uniform_int_distribution<std::size_t> size(1, 8);
        const AdjacencyMatrix m = testing::random_matrix(rng, size(rng), mode, o);
        EXPECT_TRUE(equal_matrices(to_adjacency(from_adjacency(m, mode, o)), m));
      }
    }
  }
}

}  // namespace
}  // namespace fockgraph
