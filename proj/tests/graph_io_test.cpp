#include <gtest/gtest.h>

#include "causalid/error.hpp"
#include "causalid/graph_io.hpp"
#include "causalid/random_graph.hpp"
#include "support.hpp"

namespace causalid {
namespace {

int error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(GraphIo, ParsesStatementsAndComments) {
  const Admg g = parse_graph(
      "# header\n"
      "node A\n"
      "node B   # trailing comment\n"
      "\n"
      "  node C\n"
      "A -> B\n"
      "B<->C\n");
  EXPECT_EQ(g.names(), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(g.directed_edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(g.bidirected_edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("node A\nnode B\nA -> C\n"), 3);
  EXPECT_EQ(error_line("node A\nnode A\n"), 2);
  EXPECT_EQ(error_line("node A\nA -> A\n"), 2);
  EXPECT_EQ(error_line("node A\nnode B\nA -> B\nB -> A\n"), 4);
  EXPECT_EQ(error_line("node A\nnode B\nA => B\n"), 3);
  EXPECT_EQ(error_line("node 1A\n"), 1);
  EXPECT_EQ(error_line("node A B\n"), 1);
  EXPECT_EQ(error_line("node A\nnode B\nA <-> B extra\n"), 3);
}

TEST(GraphIo, ErrorMessageNamesTheLine) {
  try {
    parse_graph("node A\nbogus\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(GraphIo, FixturesRoundTrip) {
  for (const char* name : {"fig2a", "fig4a"}) {
    const Admg g = testing::load_fixture(name);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g) << name;
  }
}

TEST(GraphIo, MalformedFixturesFail) {
  for (const char* name : {"malformed_undeclared", "malformed_cycle", "malformed_token",
                           "malformed_duplicate"}) {
    EXPECT_THROW(testing::load_fixture(name), ParseError) << name;
  }
}

TEST(GraphIo, MissingFileIsAnError) {
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), Error);
}

TEST(GraphIo, NameValidation) {
  EXPECT_TRUE(is_valid_name("X_1"));
  EXPECT_TRUE(is_valid_name("_a"));
  EXPECT_FALSE(is_valid_name(""));
  EXPECT_FALSE(is_valid_name("9x"));
  EXPECT_FALSE(is_valid_name("a-b"));
}

class RandomGraphIo : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomGraphIo, SerializeParseIdentity) {
  RandomGraphConfig cfg;
  cfg.n = 1 + GetParam() % 12;
  cfg.directed_density = 0.3;
  cfg.bidirected_density = 0.2;
  const Admg g = random_admg(cfg, GetParam());
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphIo, ::testing::Range<std::uint64_t>(0, 30));

}  // namespace
}  // namespace causalid
