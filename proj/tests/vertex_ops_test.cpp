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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fockgraph/errors.hpp"
#include "fockgraph/oracle.hpp"
#include "fockgraph/vertex_ops.hpp"
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

oracle::OracleGraph classical(const GraphState& g) {
  return oracle::make_graph(to_adjacency(g).cast<std::int64_t>(),
                            is_fermionic(g.mode()), !is_undirected(g.orientation()),
                            g.labels());
}

oracle::OracleGraph oracle_run(const GraphState& g, Verb verb,
                               std::vector<std::string> labels) {
  return oracle::oracle_step(classical(g), {verb, std::move(labels), 0, 1});
}

using Labels = std::vector<std::string>;

TEST(AddVertex, BordersPawWithZeros) {
  const GraphState g = add_vertex(paw_graph(), "5");
  AdjacencyMatrix expected = AdjacencyMatrix::Zero(5, 5);
  expected.topLeftCorner(4, 4) = paw_matrix();
  EXPECT_TRUE(equal_matrices(to_adjacency(g), expected));
  EXPECT_EQ(g.labels().back(), "5");
  EXPECT_TRUE(validate(g).empty());
}

TEST(AddVertex, FromEmptyAndDuplicate) {
  const GraphState g = add_vertex(GraphState{}, "a");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(equal_matrices(to_adjacency(g), AdjacencyMatrix::Zero(1, 1)));
  EXPECT_EQ(kind_of([] { add_vertex(paw_graph(), "1"); }), ErrorKind::kLabel);
}

TEST(CleanRow, PawVertexOne) {
  const CleanedRow out = clean_row(paw_graph(), 0);
  EXPECT_EQ(out.row, vacuum(4));
  EXPECT_EQ(out.raw_amplitude.squared(), 1);
}

TEST(CleanRow, BosonicFactorialProduct) {
  const GraphState g =
      from_adjacency(matrix_of({{0, 2, 0, 3}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                     Mode::kBosonic, Orientation::kDirected);
  const CleanedRow out = clean_row(g, 0);
  EXPECT_EQ(out.row, vacuum(4));
  EXPECT_EQ(out.raw_amplitude.squared(), oracle::factorial_product({0, 2, 0, 3}));
  EXPECT_EQ(out.raw_amplitude.squared(), 12);
}

TEST(CleanRow, IsolatedVertex) {
  const GraphState g = add_vertex(paw_graph(), "5");
  const CleanedRow out = clean_row(g, 4);
  EXPECT_EQ(out.row, vacuum(5));
  EXPECT_EQ(out.raw_amplitude.squared(), 1);
  EXPECT_EQ(kind_of([&] { clean_row(g, 5); }), ErrorKind::kIndex);
}

TEST(CleanNeighborEntries, PawVertexFour) {
  const GraphState out = clean_neighbor_entries(paw_graph(), 3);
  AdjacencyMatrix expected = paw_matrix();
  expected(0, 3) = expected(2, 3) = 0;
  EXPECT_TRUE(equal_matrices(to_adjacency(out), expected));
  for (const RowState& r : out.rows()) EXPECT_TRUE(r.is_normalized());
}

TEST(CleanNeighborEntries, IsolatedAndDirected) {
  const GraphState g = add_vertex(paw_graph(), "5");
  EXPECT_EQ(clean_neighbor_entries(g, 4), g);

  const GraphState arc = from_adjacency(matrix_of({{0, 1}, {0, 0}}), Mode::kFermionic,
                                        Orientation::kDirected);
  EXPECT_TRUE(equal_matrices(to_adjacency(clean_neighbor_entries(arc, 1)),
                             AdjacencyMatrix::Zero(2, 2)));
}

TEST(DeleteVertex, PawVertexFour) {
  const auto expected = oracle_run(paw_graph(), Verb::kDeleteVertex, {"4"});
  oracle::Matrix frozen(3, 3);
  frozen << 0, 1, 1, 1, 0, 0, 1, 0, 0;
  ASSERT_EQ(expected.matrix, frozen);
  const GraphState g = delete_vertex(paw_graph(), 3);
  EXPECT_EQ(to_adjacency(g).cast<std::int64_t>(), frozen);
  EXPECT_EQ(g.labels(), (Labels{"1", "2", "3"}));
  EXPECT_TRUE(validate(g).empty());
}

TEST(DeleteVertex, PawVertexTwo) {
  oracle::Matrix frozen(3, 3);
  frozen << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  ASSERT_EQ(oracle_run(paw_graph(), Verb::kDeleteVertex, {"2"}).matrix, frozen);
  const GraphState g = delete_vertex(paw_graph(), 1);
  EXPECT_EQ(to_adjacency(g).cast<std::int64_t>(), frozen);
  EXPECT_EQ(g.labels(), (Labels{"1", "3", "4"}));
}

TEST(DeleteVertex, SingletonToEmpty) {
  const GraphState g = add_vertex(GraphState{}, "a");
  const GraphState out = delete_vertex(g, 0);
  EXPECT_EQ(out.size(), 0u);
  EXPECT_TRUE(validate(out).empty());
  EXPECT_EQ(kind_of([&] { delete_vertex(out, 0); }), ErrorKind::kIndex);
}

TEST(Contract, PawFermionic) {
  const auto expected = oracle_run(paw_graph(), Verb::kContract, {"3", "4"});
  oracle::Matrix frozen(3, 3);
  frozen << 0, 1, 1, 1, 0, 0, 1, 0, 0;
  ASSERT_EQ(expected.matrix, frozen);

  const auto [g, report] = contract(paw_graph(), 2, 3);
  EXPECT_EQ(to_adjacency(g).cast<std::int64_t>(), frozen);
  EXPECT_EQ(g.labels(), (Labels{"1", "2", "3"}));
  EXPECT_EQ(report.kept, "3");
  EXPECT_EQ(report.removed, "4");
  EXPECT_EQ(report.saturated, (Labels{"1"}));
  EXPECT_TRUE(report.transferred.empty());
}

TEST(Contract, PawBosonic) {
  const GraphState start = paw_graph(Mode::kBosonic);
  oracle::Matrix frozen(3, 3);
  frozen << 0, 1, 2, 1, 0, 0, 2, 0, 0;
  ASSERT_EQ(oracle_run(start, Verb::kContract, {"3", "4"}).matrix, frozen);

  const auto [g, report] = contract(start, 2, 3);
  EXPECT_EQ(to_adjacency(g).cast<std::int64_t>(), frozen);
  EXPECT_TRUE(report.saturated.empty());
  ASSERT_EQ(report.transferred.size(), 1u);
  EXPECT_EQ(report.transferred[0], (Transfer{"1", 1, TransferDirection::kUndirected}));
}

TEST(Contract, SingleEdgeCollapses) {
  const GraphState g = from_adjacency(matrix_of({{0, 1}, {1, 0}}), Mode::kFermionic,
                                      Orientation::kUndirected, Labels{"a", "b"});
  const auto [out, report] = contract(g, 0, 1);
  EXPECT_EQ(out.labels(), (Labels{"a"}));
  EXPECT_TRUE(equal_matrices(to_adjacency(out), AdjacencyMatrix::Zero(1, 1)));
  EXPECT_TRUE(report.transferred.empty());
  EXPECT_EQ(kind_of([&] { contract(g, 1, 1); }), ErrorKind::kLoop);
  EXPECT_EQ(kind_of([&] { contract(g, 0, 2); }), ErrorKind::kIndex);
}

TEST(Contract, DirectedKeepsArcDirections) {
  // a -> c, c -> b ; contract(a, c): a inherits c -> b as a -> b.
  // b -> c would become b -> a.
  const GraphState g =
      from_adjacency(matrix_of({{0, 0, 1}, {0, 0, 2}, {0, 1, 0}}), Mode::kBosonic,
                     Orientation::kDirected, Labels{"a", "b", "c"});
  const auto [out, report] = contract(g, 0, 2);
  EXPECT_TRUE(equal_matrices(to_adjacency(out), matrix_of({{0, 1}, {2, 0}})));
  EXPECT_EQ(to_adjacency(out).cast<std::int64_t>(),
            oracle_run(g, Verb::kContract, {"a", "c"}).matrix);
  ASSERT_EQ(report.transferred.size(), 2u);
  EXPECT_EQ(report.transferred[0], (Transfer{"b", 1, TransferDirection::kOutgoing}));
  EXPECT_EQ(report.transferred[1], (Transfer{"b", 2, TransferDirection::kIncoming}));
}

class VertexProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{0x7e47e};
};

TEST_F(VertexProperties, DeletionMatchesOracle) {
  for (int trial = 0; trial < 150; ++trial) {
    for (Orientation o : testing::kOrientations) {
      for (Mode mode : testing::kModes) {
        const GraphState g = testing::random_graph(rng, 8, mode, o);
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        const std::size_t m = pick(rng);

        const CleanedRow cleaned = clean_row(g, m);
        const Occupations& occ = g.rows()[m].occupations();
        std::vector<std::int64_t> wide(occ.data(), occ.data() + occ.size());
        EXPECT_EQ(cleaned.raw_amplitude.squared(), oracle::factorial_product(wide));

        const GraphState out = delete_vertex(g, m);
        const auto expected = oracle_run(g, Verb::kDeleteVertex, {g.label(m)});
        EXPECT_EQ(to_adjacency(out).cast<std::int64_t>(), expected.matrix);
        EXPECT_EQ(out.labels(), expected.labels);
        EXPECT_TRUE(validate(out).empty());

        if (is_undirected(o) && mode == Mode::kBosonic) {
          const auto edges = [](const GraphState& s) {
            return to_adjacency(s).cast<std::int64_t>().sum() / 2;
          };
          EXPECT_EQ(edges(g) - edges(out),
                    static_cast<std::int64_t>(occ.cast<std::int64_t>().sum()));
        }
      }
    }
  }
}

TEST_F(VertexProperties, ContractionMatchesOracle) {
  for (int trial = 0; trial < 150; ++trial) {
    for (Orientation o : testing::kOrientations) {
      for (Mode mode : testing::kModes) {
        const GraphState g = testing::random_graph(rng, 8, mode, o);
        if (g.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j) j = (j + 1) % g.size();

        const auto [out, report] = contract(g, i, j);
        const auto expected = oracle_run(g, Verb::kContract, {g.label(i), g.label(j)});
        EXPECT_EQ(to_adjacency(out).cast<std::int64_t>(), expected.matrix);
        EXPECT_EQ(out.labels(), expected.labels);
        EXPECT_TRUE(validate(out).empty());
        if (!is_fermionic(mode)) EXPECT_TRUE(report.saturated.empty());

        std::set<std::string> merged;
        for (std::size_t v : neighbors(g, i)) merged.insert(g.label(v));
        for (std::size_t v : neighbors(g, j)) merged.insert(g.label(v));
        merged.erase(g.label(i));
        merged.erase(g.label(j));
        std::set<std::string> actual;
        for (std::size_t v : neighbors(out, *out.index_of(g.label(i)))) {
          actual.insert(out.label(v));
        }
        EXPECT_EQ(actual, merged);
      }
    }
  }
}

TEST_F(VertexProperties, AddThenDeleteIsIdentity) {
  for (int trial = 0; trial < 100; ++trial) {
    for (Orientation o : testing::kOrientations) {
      for (Mode mode : testing::kModes) {
        const GraphState g = testing::random_graph(rng, 8, mode, o);
        const GraphState grown = add_vertex(g, "fresh");
        EXPECT_EQ(delete_vertex(grown, grown.size() - 1), g);
      }
    }
  }
}

}  // namespace
}  // namespace fockgraph
