#include <gtest/gtest.h>

#include <random>

#include "hypershare/hypergraph.hpp"
#include "oracles.hpp"

using namespace hypershare;

namespace {

Hypergraph fig3() { return {5, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {2, 4, 5}}}; }

Hypergraph fig9_base() { return {6, 3, {{1, 2, 3}, {1, 4, 5}, {1, 4, 6}, {4, 5, 6}}}; }

std::vector<Edge> edge_list(const Hypergraph& g) { return g.edges(); }

ErrorCode cluster_error(const Hypergraph& base, std::vector<VertexSet> comps) {
  try {
    validate_cluster(base, std::move(comps));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Inconsistent;  // sentinel: validation passed
}

}  // namespace

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(4, 3, {{1, 2}}), Error);
  EXPECT_THROW(Hypergraph(4, 3, {{1, 2, 5}}), Error);
  EXPECT_THROW(Hypergraph(4, 3, {{1, 2, 3}, {3, 2, 1}}), Error);
  EXPECT_THROW(VertexSet({1, 1, 2}), Error);
  try {
    Hypergraph(4, 3, {{1, 2}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UniformityError);
  }
}

TEST(Hypergraph, ColexOrdering) {
  auto g = complete_hypergraph(4, 3);
  EXPECT_EQ(edge_list(g), (std::vector<Edge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(colex_rank({1, 2}), 0u);
  EXPECT_EQ(colex_rank({1, 3}), 1u);
  EXPECT_EQ(colex_rank({2, 3}), 2u);
  EXPECT_EQ(colex_rank({1, 4}), 3u);
}

TEST(Incidence, EntriesByTupleLabel) {
  auto inc = incidence_matrix(fig3());
  ASSERT_EQ(inc.matrix.rows(), 6u);
  ASSERT_EQ(inc.matrix.cols(), 10u);
  // Rows of the printed matrix, columns (12)(13)(14)(15)(23)(24)(25)(34)(35)(45).
  const std::vector<std::vector<VertexSet>> ones = {
      {{1, 2}, {1, 3}, {2, 3}}, {{1, 2}, {1, 4}, {2, 4}}, {{1, 3}, {1, 4}, {3, 4}},
      {{1, 2}, {1, 5}, {2, 5}}, {{2, 3}, {2, 5}, {3, 5}}, {{2, 4}, {2, 5}, {4, 5}},
  };
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 10; ++c) {
      const auto& t = inc.tuples[c];
      bool expected = std::find(ones[r].begin(), ones[r].end(), t) != ones[r].end();
      EXPECT_EQ(inc.matrix.get(r, c), expected) << "row " << r << " tuple " << t.to_string();
    }
  }
}

TEST(Incidence, SingleGraphEdge) {
  auto inc = incidence_matrix(Hypergraph(2, 2, {{1, 2}}));
  EXPECT_EQ(inc.matrix, (gf2::BitMatrix{{1, 1}}));
}

TEST(Incidence, CompleteThreeUniformOnFour) {
  auto inc = incidence_matrix(complete_hypergraph(4, 3));
  EXPECT_EQ(inc.matrix.rows(), 4u);
  EXPECT_EQ(inc.matrix.cols(), 6u);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(inc.matrix.row(r).count(), 3u);
}

TEST(Incidence, MatchesDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned n = 3 + rng() % 6;
    unsigned k = 2 + rng() % (n - 2);
    auto g = oracle::random_hypergraph(rng, n, k, 0.4);
    auto inc = incidence_matrix(g);
    ASSERT_EQ(inc.tuples.size(), static_cast<std::size_t>(binomial(n, k - 1)));
    for (std::size_t r = 0; r < g.edge_count(); ++r)
      for (std::size_t c = 0; c < inc.tuples.size(); ++c) {
        EXPECT_EQ(inc.matrix.get(r, c), inc.tuples[c].is_subset_of(g.edges()[r]));
        EXPECT_EQ(inc.column_of(inc.tuples[c]), c);
      }
  }
}

TEST(Connectivity, FiveVertex) { EXPECT_TRUE(is_topologically_connected(fig3())); }

TEST(Connectivity, FiveVertexWithoutLastEdge) {
  auto edges = edge_list(fig3());
  edges.pop_back();  // {2,4,5}
  EXPECT_FALSE(is_topologically_connected(Hypergraph(5, 3, edges)));
}

TEST(Connectivity, StarsAreConnected) {
  for (Vertex n = 3; n <= 8; ++n)
    for (std::size_t k = 2; k < n; ++k) EXPECT_TRUE(is_topologically_connected(star_hypergraph(n, k))) << n << "," << k;
}

TEST(Connectivity, EmptyEdgeSet) {
  EXPECT_FALSE(is_topologically_connected(Hypergraph(4, 3, {})));
  EXPECT_FALSE(is_topologically_connected(Hypergraph(2, 2, {})));
}

TEST(Connectivity, RequiresUniformity) { EXPECT_THROW(is_topologically_connected(Hypergraph(3, 0, {{1}})), Error); }

TEST(Minimal, FiveVertexIsAlreadyMinimal) { EXPECT_EQ(minimal_connected_subgraph(fig3()), fig3()); }

TEST(Minimal, CompleteThreeUniformOnFour) {
  auto m = minimal_connected_subgraph(complete_hypergraph(4, 3));
  EXPECT_EQ(edge_list(m), (std::vector<Edge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
}

TEST(Minimal, CompleteGraphGivesSpanningTree) {
  for (Vertex n = 2; n <= 8; ++n) {
    auto t = minimal_connected_subgraph(complete_hypergraph(n, 2));
    EXPECT_EQ(t.edge_count(), n - 1u);
    EXPECT_TRUE(is_path_connected(t));
  }
}

TEST(Minimal, DisconnectedInputThrows) {
  try {
    minimal_connected_subgraph(Hypergraph(5, 3, {{1, 2, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
}

TEST(Minimal, CompleteRankIdentity) {
  for (Vertex n = 3; n <= 8; ++n)
    for (std::size_t k = 2; k < n; ++k) {
      auto full = complete_hypergraph(n, k);
      const auto expected = static_cast<std::size_t>(binomial(n - 1, static_cast<std::int64_t>(k) - 1));
      EXPECT_EQ(gf2::rank(incidence_matrix(full).matrix), expected);
      EXPECT_EQ(minimal_connected_subgraph(full).edge_count(), expected);
    }
}

// Every connected 3-uniform hypergraph on at most 5 vertices, and random ones on
// 6 vertices: the extracted subgraph is connected and loses connectivity after
// deleting any single edge.
TEST(Minimal, BasisPropertyExhaustive) {
  auto check = [](const Hypergraph& g) {
    if (!is_topologically_connected(g)) return;
    auto m = minimal_connected_subgraph(g);
    ASSERT_TRUE(is_topologically_connected(m));
    for (const auto& e : m.edges()) EXPECT_TRUE(g.contains_edge(e));
    for (std::size_t drop = 0; drop < m.edge_count(); ++drop) {
      auto edges = m.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
      EXPECT_FALSE(is_topologically_connected(Hypergraph(m.n(), m.k(), edges)));
    }
  };
  for (unsigned n = 4; n <= 5; ++n)
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << binomial(n, 3)); ++sel) check(oracle::subset_hypergraph(n, 3, sel));
  for (unsigned n = 4; n <= 6; ++n)
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << binomial(n, 2)); ++sel) check(oracle::subset_hypergraph(n, 2, sel));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3000; ++trial) check(oracle::random_hypergraph(rng, 6, 3 + trial % 2, 0.6));
}

TEST(Connectivity, AgreesWithClosureOracle) {
  for (unsigned n = 3; n <= 5; ++n)
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << binomial(n, 3)); ++sel) {
      auto g = oracle::subset_hypergraph(n, 3, sel);
      std::vector<oracle::Mask> masks;
      for (const auto& e : g.edges()) masks.push_back(oracle::to_mask(e));
      EXPECT_EQ(is_topologically_connected(g), oracle::closure_connected(n, 3, masks));
    }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    auto g = oracle::random_hypergraph(rng, 6, 3, 0.3 + 0.1 * (trial % 4));
    std::vector<oracle::Mask> masks;
    for (const auto& e : g.edges()) masks.push_back(oracle::to_mask(e));
    EXPECT_EQ(is_topologically_connected(g), oracle::closure_connected(6, 3, masks));
  }
}

TEST(Induced, FiveVertexUserOne) {
  auto g1 = induced_hypergraph(fig3(), 1);
  EXPECT_EQ(g1.to_original, (std::vector<Vertex>{2, 3, 4, 5}));
  std::vector<Edge> lifted;
  for (const auto& e : g1.graph.edges()) lifted.push_back(g1.lift(e));
  EXPECT_EQ(lifted, (std::vector<Edge>{{2, 3}, {2, 4}, {3, 4}, {2, 5}}));
  EXPECT_EQ(g1.graph.k(), 2u);
}

TEST(Induced, FiveVertexUserTwo) {
  auto g2 = induced_hypergraph(fig3(), 2);
  std::vector<Edge> lifted;
  for (const auto& e : g2.graph.edges()) lifted.push_back(g2.lift(e));
  std::sort(lifted.begin(), lifted.end());
  std::vector<Edge> expected{{1, 3}, {1, 4}, {1, 5}, {3, 5}, {4, 5}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(lifted, expected);
}

TEST(Induced, StarCentreSeesCompleteGraph) {
  auto g = induced_hypergraph(star_hypergraph(4, 3), 1);
  EXPECT_EQ(g.graph, complete_hypergraph(3, 2));
  EXPECT_EQ(g.to_original, (std::vector<Vertex>{2, 3, 4}));
}

TEST(Induced, ConnectivityIsInherited) {
  std::mt19937_64 rng(41);
  int connected_seen = 0;
  for (unsigned n = 4; n <= 7; ++n)
    for (unsigned k = 3; k <= 4 && k < n; ++k)
      for (int trial = 0; trial < 80; ++trial) {
        auto g = oracle::random_hypergraph(rng, n, k, 0.5 + 0.1 * (trial % 5));
        if (!is_topologically_connected(g)) continue;
        ++connected_seen;
        for (Vertex i = 1; i <= n; ++i) EXPECT_TRUE(is_topologically_connected(induced_hypergraph(g, i).graph));
      }
  EXPECT_GT(connected_seen, 100);
}

TEST(PathConnected, Examples) {
  EXPECT_TRUE(is_path_connected(Hypergraph(6, 0, {{1, 2, 3}, {1, 4, 5, 6}})));
  EXPECT_FALSE(is_path_connected(Hypergraph(4, 2, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_path_connected(Hypergraph(4, 0, {{1, 2, 3, 4}})));
  EXPECT_FALSE(is_path_connected(Hypergraph(4, 0, {{1, 2, 3}})));  // 4 isolated
}

TEST(CycleFree, Examples) {
  EXPECT_TRUE(is_cycle_free(Hypergraph(6, 0, {{1, 2, 3}, {1, 4, 5, 6}})));
  EXPECT_FALSE(is_cycle_free(Hypergraph(6, 0, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}})));
  EXPECT_FALSE(is_cycle_free(Hypergraph(4, 0, {{1, 2, 3}, {2, 3, 4}})));
  EXPECT_TRUE(is_cycle_free(Hypergraph(5, 2, {{1, 2}, {2, 3}, {3, 4}, {3, 5}})));
  EXPECT_FALSE(is_cycle_free(Hypergraph(3, 2, {{1, 2}, {2, 3}, {1, 3}})));
}

TEST(Cluster, ExampleIsValid) {
  auto spec = validate_cluster(fig9_base(), {{1, 2, 3}, {1, 4, 5, 6}});
  EXPECT_EQ(spec.edge_component, (std::vector<std::size_t>{0, 1, 1, 1}));
  std::size_t sizes = 0, degrees = 0;
  for (const auto& a : spec.components) sizes += a.size() - 1;
  for (Vertex v = 1; v <= 6; ++v) degrees += spec.component_degree(v) - 1;
  EXPECT_EQ(sizes, 5u);
  EXPECT_EQ(degrees, 1u);
}

TEST(Cluster, RejectionReasons) {
  EXPECT_EQ(cluster_error(Hypergraph(6, 3, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}}), {{1, 2, 3}, {1, 4, 5, 6}}),
            ErrorCode::ComponentNotConnected);
  EXPECT_EQ(cluster_error(Hypergraph(6, 3, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}}), {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}}),
            ErrorCode::HasCycle);
  EXPECT_EQ(cluster_error(fig9_base(), {{1, 2, 3}, {4, 5, 6}}), ErrorCode::NotPathConnected);
  EXPECT_EQ(cluster_error(fig9_base(), {{1, 2, 3}, {1, 4, 5}, {1, 6}}), ErrorCode::ComponentNotConnected);
  EXPECT_EQ(cluster_error(Hypergraph(6, 3, {{1, 2, 3}, {1, 4, 5}, {1, 4, 6}, {4, 5, 6}, {2, 4, 5}}),
                          {{1, 2, 3}, {1, 4, 5, 6}}),
            ErrorCode::EdgeOutsideComponents);
  EXPECT_EQ(cluster_error(fig9_base(), {{1, 2, 3}, {1, 4, 5, 7}}), ErrorCode::InvalidCluster);
  EXPECT_EQ(cluster_error(Hypergraph(6, 3, {{1, 2, 3}, {1, 4, 5}, {1, 4, 6}, {4, 5, 6}}), {{1, 2, 3}, {1, 4, 5, 6}}),
            ErrorCode::Inconsistent);
}

// Chains and trees of complete components glued at single vertices.
TEST(Cluster, IdentitiesHoldOnRandomTreesOfComponents) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 3;
    std::vector<VertexSet> comps;
    std::vector<Edge> edges;
    Vertex next = 1;
    std::vector<Vertex> used;
    const int m = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < m; ++j) {
      std::vector<Vertex> vs;
      if (j > 0) vs.push_back(used[rng() % used.size()]);
      const auto fresh = (j == 0 ? 3 : 2) + rng() % 2;
      for (unsigned t = 0; t < fresh; ++t) vs.push_back(next++);
      for (auto v : vs) used.push_back(v);
      VertexSet a(vs);
      for (auto& s : colex_subsets(static_cast<Vertex>(vs.size()), k)) {
        std::vector<Vertex> e;
        for (auto local : s) e.push_back(a.vertices()[local - 1]);
        edges.emplace_back(e);
      }
      comps.push_back(a);
    }
    Hypergraph base(next - 1, k, edges);
    auto spec = validate_cluster(base, comps);
    std::size_t sizes = 0, degrees = 0;
    for (const auto& a : spec.components) sizes += a.size() - 1;
    for (Vertex v = 1; v <= base.n(); ++v) degrees += spec.component_degree(v) - 1;
    EXPECT_EQ(sizes, base.n() - 1u);
    EXPECT_EQ(degrees, spec.components.size() - 1);
  }
}
