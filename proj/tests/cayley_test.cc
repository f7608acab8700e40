#include "bentgraph/cayley.h"

#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "bentgraph/generators.h"
#include "bentgraph/transform.h"
#include "oracles.h"

namespace bentgraph {
namespace {

BooleanFunction and2() { return from_truth_table(2, "0001"); }
BooleanFunction k4() { return from_truth_table(2, "0111"); }

std::set<std::pair<std::uint32_t, std::uint32_t>> edges(const CayleyGraph& g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  g.for_each_edge([&](std::uint32_t u, std::uint32_t w) { out.emplace(u, w); });
  return out;
}

TEST(BuildCayley, AndGivesPerfectMatching) {
  const auto g = build_cayley(and2());
  EXPECT_FALSE(g.has_loops());
  EXPECT_EQ(edges(g), (std::set<std::pair<std::uint32_t, std::uint32_t>>{{0b00, 0b11}, {0b01, 0b10}}));
}

TEST(BuildCayley, WeightThreeGivesK4) {
  const auto g = build_cayley(k4());
  EXPECT_EQ(edges(g).size(), 6u);
  EXPECT_EQ(g.degree(), 3u);
  EXPECT_FALSE(g.has_loops());
}

TEST(BuildCayley, ZeroInSupportLoopsEveryVertex) {
  const auto g = build_cayley(from_truth_table(3, "10000001"));
  EXPECT_TRUE(g.has_loops());
  std::uint32_t loops = 0;
  g.for_each_loop([&](std::uint32_t u) {
    EXPECT_TRUE(g.adjacent(u, u));
    ++loops;
  });
  EXPECT_EQ(loops, 8u);
  const auto a = g.adjacency_matrix();
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i][i], 1);
}

TEST(BuildCayley, SymmetricAndMatchesDefinition) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto f = random_function(1 + static_cast<int>(seed % 6), seed);
    const auto g = build_cayley(f);
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
      std::size_t deg = 0;
      for (std::uint32_t w = 0; w < g.vertex_count(); ++w) {
        ASSERT_EQ(g.adjacent(u, w), g.adjacent(w, u));
        ASSERT_EQ(g.adjacent(u, w), f(u ^ w) == 1);
        deg += g.adjacent(u, w);
      }
      EXPECT_EQ(deg, g.degree());
    }
    for (const auto& [u, w] : edges(g)) EXPECT_LT(u, w);
  }
}

TEST(SpanDim, Examples) {
  EXPECT_EQ(gf2_span_dim(PointSet(2, {0b11})), 1);
  EXPECT_EQ(gf2_span_dim(PointSet(2, {0b01, 0b10, 0b11})), 2);
  EXPECT_EQ(gf2_span_dim(PointSet(2)), 0);
  EXPECT_EQ(gf2_span_dim(PointSet(3, {0})), 0);
  EXPECT_EQ(gf2_span_dim(PointSet(4, {0b0011, 0b0101, 0b0110})), 2);
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(and2()), 2u);
  EXPECT_EQ(component_count_by_search(build_cayley(and2())), 2u);
  EXPECT_EQ(component_count(k4()), 1u);
  EXPECT_EQ(component_count(BooleanFunction::zero(5)), 32u);
}

TEST(ComponentCount, SpanRouteMatchesSearchAndUnionFind) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    // Sparse functions so that disconnected graphs are common.
    auto f = random_function(n, seed);
    const auto g = random_function(n, seed + 7777);
    const auto h = random_function(n, seed + 9999);
    std::vector<std::uint8_t> sparse(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) sparse[x] = f(x) & g(x) & h(x);
    f = BooleanFunction(n, sparse);
    const auto by_span = component_count(f);
    ASSERT_EQ(by_span, component_count_by_search(build_cayley(f)));
    ASSERT_EQ(by_span, oracle::components_by_union_find(f));
  }
}

TEST(AdjacencyRank, Examples) {
  EXPECT_EQ(adjacency_rank(and2()), 4u);
  EXPECT_EQ(adjacency_rank(BooleanFunction::zero(3)), 0u);
  EXPECT_EQ(adjacency_rank(k4()), 4u);
  EXPECT_EQ(elimination_rank(build_cayley(k4())), 4u);
  // x1 at n=2: 4-cycle with spectrum {2, 0, 0, -2}.
  EXPECT_EQ(elimination_rank(build_cayley(from_truth_table(2, "0011"))), 2u);
}

TEST(AdjacencyRank, EliminationGuard) {
  EXPECT_THROW(elimination_rank(build_cayley(random_function(7, 1))), ResourceLimitExceeded);
  // The eigenvalue count alone has no such limit.
  EXPECT_NO_THROW(adjacency_rank(random_function(9, 1)));
}

TEST(AdjacencyRank, EliminationAtN6) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_function(6, seed);
    const auto e = cayley_eigenvalues(f);
    const auto nonzero = static_cast<std::uint64_t>(
        std::count_if(e.indexed.begin(), e.indexed.end(), [](std::int64_t x) { return x != 0; }));
    EXPECT_EQ(elimination_rank(build_cayley(f)), nonzero);
  }
}

TEST(SymmetryReport, Examples) {
  const auto x1 = spectrum_symmetry_report(from_truth_table(2, "0011"));
  EXPECT_TRUE(x1.connected);
  EXPECT_TRUE(x1.has_minus_lambda0);
  EXPECT_TRUE(x1.spectrum_symmetric);

  const auto complete = spectrum_symmetry_report(k4());
  EXPECT_TRUE(complete.connected);
  EXPECT_FALSE(complete.has_minus_lambda0);
  EXPECT_FALSE(complete.spectrum_symmetric);

  const auto empty = spectrum_symmetry_report(BooleanFunction::zero(2));
  EXPECT_FALSE(empty.connected);
}

TEST(SymmetryReport, ConnectedGraphsSatisfyEquivalence) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto f = random_function(2 + static_cast<int>(seed % 5), seed);
    const auto r = spectrum_symmetry_report(f);
    if (r.connected) ASSERT_EQ(r.has_minus_lambda0, r.spectrum_symmetric) << f.to_bit_string();
  }
}

TEST(EigenvectorProperty, CharactersAreEigenvectors) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto f = random_function(n, seed * 13 + static_cast<std::uint64_t>(n));
      const auto a = build_cayley(f).adjacency_matrix();
      const auto e = cayley_eigenvalues(f);
      for (std::uint32_t w = 0; w < f.size(); ++w) {
        for (std::uint32_t u = 0; u < f.size(); ++u) {
          std::int64_t sum = 0;
          for (std::uint32_t x = 0; x < f.size(); ++x) sum += a[u][x] * (oracle::parity_dot(w, x) ? -1 : 1);
          ASSERT_EQ(sum, e.indexed[w] * (oracle::parity_dot(w, u) ? -1 : 1));
        }
      }
    }
  }
}

TEST(Lambda0Multiplicity, EqualsComponentCount) {
  for (std::uint32_t t = 0; t < 16; ++t) {
    std::vector<std::uint8_t> table(4);
    for (int i = 0; i < 4; ++i) table[static_cast<std::size_t>(i)] = (t >> i) & 1u;
    const BooleanFunction f(2, table);
    const auto e = cayley_eigenvalues(f);
    EXPECT_EQ(e.multiplicity(e.lambda0()), component_count(f));
  }
}

}  // namespace
}  // namespace bentgraph
