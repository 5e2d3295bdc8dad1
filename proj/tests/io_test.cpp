#include <gtest/gtest.h>

#include "hypershare/io.hpp"

using namespace hypershare;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    io::parse_hypergraph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Inconsistent;
}

std::string parse_message(std::string_view text) {
  try {
    io::parse_hypergraph(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Fixtures, FiveVertexText) {
  EXPECT_EQ(io::to_text(io::fixture("fig3")), "5 3\n1 2 3\n1 2 4\n1 3 4\n1 2 5\n2 3 5\n2 4 5\n");
}

TEST(Fixtures, NonexampleEdges) {
  EXPECT_EQ(io::to_text(io::fixture("g1_nonexample")),
            "6 3\n1 2 3\n1 3 4\n1 4 5\n1 5 6\ncomponents\n1 2 3\n1 4 5 6\n");
  EXPECT_EQ(io::to_text(io::fixture("g2_nonexample")),
            "6 3\n1 2 4\n1 3 5\n2 3 6\ncomponents\n1 2 4\n1 3 5\n2 3 6\n");
}

TEST(Fixtures, ClusterAndSmallGraphs) {
  EXPECT_EQ(io::to_text(io::fixture("fig9_cluster")), "6 3\n1 2 3\n1 4 5\n1 4 6\n4 5 6\ncomponents\n1 2 3\n1 4 5 6\n");
  EXPECT_EQ(io::to_text(io::fixture("star_n3_k2")), "3 2\n1 3\n2 3\n");
  EXPECT_EQ(io::to_text(io::fixture("fig2_tree")), "7 2\n1 3\n2 3\n3 4\n4 5\n5 6\n5 7\n");
}

TEST(Fixtures, ParametrisedNames) {
  EXPECT_EQ(io::fixture("forehead_4").graph, complete_hypergraph(4, 3));
  EXPECT_EQ(io::fixture("complete_6_3").graph, complete_hypergraph(6, 3));
  EXPECT_EQ(io::fixture("complete(6,3)").graph, complete_hypergraph(6, 3));
  for (auto bad : {"fig4", "forehead_", "complete_3", "complete_3_x", "forehead_1", "complete_3_4"}) {
    try {
      io::fixture(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownFixture) << bad;
    }
  }
}

TEST(Fixtures, RoundTrip) {
  auto names = io::standard_fixture_names();
  names.insert(names.end(), {"forehead_3", "forehead_6", "complete_7_4"});
  for (const auto& name : names) {
    auto f = io::fixture(name);
    auto text = io::to_text(f);
    EXPECT_EQ(io::parse_hypergraph(text), f) << name;
    EXPECT_EQ(io::to_text(io::parse_hypergraph(text)), text) << name;
  }
}

TEST(Parse, CommentsAndBlankLines) {
  auto f = io::parse_hypergraph("# fig 3 without two edges\n\n5 3\n1 2 3   # first\n  1 2 4\n\n");
  EXPECT_EQ(f.graph, Hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}}));
  EXPECT_FALSE(f.components);
}

TEST(Parse, EmptyEdgeList) {
  auto f = io::parse_hypergraph("4 3\n");
  EXPECT_EQ(f.graph.edge_count(), 0u);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error(""), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("5\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("5 3\n1 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("5 3\n1 2 9\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("5 3\n1 2 3\n3 2 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("5 3\n1 2 x\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("5 3\n1 1 2\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_message("5 3\n1 2 3\n\n1 2\n"), "PARSE_ERROR: line 4: hyperedge has 2 vertices, expected 3");
}

TEST(Strategy, RoundTrip) {
  std::vector<Strategy> all{
      synthesize_topological(io::fixture("fig3").graph),
      synthesize_cluster(validate_cluster(io::fixture("fig9_cluster").graph, *io::fixture("fig9_cluster").components)),
      synthesize_tree(io::fixture("fig2_tree").graph),
      synthesize_forehead(5),
      handcrafted_nonexample_schemes().g1,
  };
  for (const auto& s : all) {
    auto text = io::to_text(s);
    EXPECT_TRUE(io::looks_like_strategy(text));
    auto back = io::parse_strategy(text);
    EXPECT_EQ(back.coins(), s.coins());
    EXPECT_EQ(back.broadcasts(), s.broadcasts());
    EXPECT_EQ(back.n(), s.n());
    EXPECT_EQ(back.k(), s.k());
    EXPECT_EQ(io::to_text(back), text);
  }
}

TEST(Strategy, TextFormat) {
  auto s = synthesize_tree(io::fixture("star_n3_k2").graph);
  EXPECT_EQ(io::to_text(s), "strategy 3 2\ncoin 1-3 0\ncoin 2-3 0\nsay 3: 1-3/0 ^ 2-3/0\n");
}

TEST(Strategy, ParseErrors) {
  for (auto bad : {"strategy 3 2\n", "coin 1-3\n", "coin 1-3 0\nsay 3 1-3/0\n", "coin 1-3 0\nsay 3: 1-3\n",
                   "coin 1-3 0\nshout 3: 1-3/0\n", "strategy 2 2\ncoin 1-3 0\n"}) {
    try {
      io::parse_strategy(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  // well-formed text, but the speaker does not hold the coin
  try {
    io::parse_strategy("coin 1-3 0\ncoin 2-3 0\nsay 1: 1-3/0 ^ 2-3/0\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidStrategy);
  }
}
