#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "causalid/condid.hpp"
#include "causalid/graph_io.hpp"
#include "causalid/render.hpp"
#include "cli.hpp"
#include "support.hpp"

namespace causalid {
namespace {

using nlohmann::json;
using testing::load_fixture;
using testing::vars;

std::string data_file(const std::string& name) {
  return std::string(CAUSALID_TEST_DATA_DIR) + "/" + name + ".graph";
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> identify_args(const std::string& fixture, const std::string& t, const std::string& s,
                                       const std::string& c = "") {
  std::vector<std::string> args{"identify", "--graph", data_file(fixture), "--do", t, "--outcome", s};
  if (!c.empty()) {
    args.push_back("--given");
    args.push_back(c);
  }
  return args;
}

TEST(CliIdentify, IdentifiedQueryPrintsExpression) {
  const CliRun r = run(identify_args("fig2a", "X", "Y", "W"));
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("P_x(y|w) = ", 0), 0u) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(CliIdentify, NotIdentifiedReportsWitness) {
  const CliRun r = run(identify_args("fig2a", "X", "Y", "W,B"));
  EXPECT_EQ(r.code, cli::kExitNotIdentified);
  EXPECT_NE(r.out.find("not identified"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("{Y}"), std::string::npos) << r.out;
}

TEST(CliIdentify, UnconditionalFailureNamesTheBlock) {
  auto args = identify_args("fig2a", "X", "Y,W");
  args.insert(args.end(), {"--format", "json"});
  const CliRun r = run(args);
  EXPECT_EQ(r.code, cli::kExitNotIdentified);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_FALSE(doc["identifiable"].get<bool>());
  EXPECT_TRUE(doc["expression"].is_null());
  EXPECT_EQ(doc["failure"]["reason"], "unidentified_blocks");
  EXPECT_EQ(doc["failure"]["failing_blocks"], json::parse(R"([["W"]])"));
  EXPECT_EQ(doc["diagnostics"]["D"], json::parse(R"(["W","Z","Y"])"));
}

TEST(CliIdentify, JsonCarriesPartitionAndRoundTrips) {
  auto args = identify_args("fig4a", "X", "Y", "A");
  args.insert(args.end(), {"--format", "json"});
  const CliRun r = run(args);
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["identifiable"].get<bool>());
  const json& p = doc["diagnostics"]["partition"];
  EXPECT_TRUE(p["F0"].empty());
  EXPECT_TRUE(p["I0"].empty());
  EXPECT_EQ(doc["diagnostics"]["F"], json::parse(R"(["B","W","Z"])"));

  const Admg g = load_fixture("fig4a");
  const std::string emitted = doc["expression"].dump();
  const Expr parsed = parse_expr_json(emitted, g.names());
  EXPECT_EQ(render(parsed, g.names(), RenderFormat::json), emitted);
  const QueryResult direct = conditional_effect(g, {vars(g, "X"), vars(g, "Y"), vars(g, "A")});
  EXPECT_TRUE(structurally_equal(parsed, direct.expression()));
}

TEST(CliIdentify, LatexAndMinimalContexts) {
  auto args = identify_args("fig2a", "X", "Y", "W");
  args.insert(args.end(), {"--format", "latex", "--minimal-contexts"});
  const CliRun r = run(args);
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("\\frac"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("P(z \\mid x)"), std::string::npos) << r.out;
}

TEST(CliIdentify, ErrorsExitOne) {
  const CliRun cycle = run(identify_args("malformed_cycle", "A", "B"));
  EXPECT_EQ(cycle.code, cli::kExitError);
  EXPECT_NE(cycle.err.find("line 4"), std::string::npos) << cycle.err;
  EXPECT_EQ(run(identify_args("malformed_token", "A", "B")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("malformed_undeclared", "A", "B")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("malformed_duplicate", "A", "B")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("no_such_file", "A", "B")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("fig2a", "X", "X")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("fig2a", "X", "Y", "Y")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("fig2a", "Nope", "Y")).code, cli::kExitError);
  EXPECT_EQ(run(identify_args("fig2a", "X,", "Y")).code, cli::kExitError);
  auto bad_format = identify_args("fig2a", "X", "Y");
  bad_format.insert(bad_format.end(), {"--format", "xml"});
  EXPECT_EQ(run(bad_format).code, cli::kExitError);
  EXPECT_EQ(run({"identify", "--graph", data_file("fig2a")}).code, cli::kExitError);
}

TEST(CliVerify, ExitCodes) {
  auto base = [](const std::string& s, const std::string& c) {
    std::vector<std::string> args{"verify", "--graph", data_file("fig2a"), "--do", "X", "--outcome", s};
    if (!c.empty()) args.insert(args.end(), {"--given", c});
    return args;
  };
  auto pass = base("Y", "W");
  pass.insert(pass.end(), {"--models", "100", "--seed", "7", "--tol", "1e-9"});
  const CliRun ok = run(pass);
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  const json report = json::parse(ok.out);
  EXPECT_TRUE(report["pass"].get<bool>());
  EXPECT_EQ(report["n_models"], 100);
  EXPECT_EQ(report["schema_version"], 1);

  auto empty = base("Y", "W");
  empty.insert(empty.end(), {"--models", "0"});
  EXPECT_EQ(run(empty).code, cli::kExitOk);

  auto unidentified = base("W", "");
  unidentified.insert(unidentified.end(), {"--models", "3"});
  EXPECT_EQ(run(unidentified).code, cli::kExitNotIdentified);

  // Tighter than rounding error: the honest report is a failure.
  auto strict = base("Y", "W");
  strict.insert(strict.end(), {"--models", "5", "--tol", "1e-300"});
  const CliRun failed = run(strict);
  EXPECT_EQ(failed.code, cli::kExitVerifyFailed);
  EXPECT_FALSE(json::parse(failed.out)["pass"].get<bool>());

  auto bad_card = base("Y", "W");
  bad_card.insert(bad_card.end(), {"--card", "1"});
  EXPECT_EQ(run(bad_card).code, cli::kExitError);
}

TEST(CliComponents, ListsBlocks) {
  const CliRun all = run({"components", "--graph", data_file("fig2a")});
  EXPECT_EQ(all.code, cli::kExitOk);
  EXPECT_EQ(all.out, "{A,X,W,Y} {B} {Z}\n");
  const CliRun scoped = run({"components", "--graph", data_file("fig2a"), "--scope", "Y,Z,W"});
  EXPECT_EQ(scoped.out, "{W} {Z} {Y}\n");
  const CliRun empty_scope = run({"components", "--graph", data_file("fig2a"), "--scope", ""});
  EXPECT_EQ(empty_scope.out, all.out);
  EXPECT_EQ(run({"components", "--graph", data_file("malformed_cycle")}).code, cli::kExitError);
}

TEST(CliUsage, UnknownCommandsAndHelp) {
  EXPECT_EQ(run({}).code, cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(run({"identify", "--help"}).code, cli::kExitOk);
}

int exit_status(const std::string& command) {
  const int raw = std::system((command + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(CliBinary, ExitCodesSurviveTheProcessBoundary) {
  const std::string bin = CAUSALID_CLI_BINARY;
  const std::string fig2a = data_file("fig2a");
  EXPECT_EQ(exit_status(bin + " identify --graph " + fig2a + " --do X --outcome Y --given W"), 0);
  EXPECT_EQ(exit_status(bin + " identify --graph " + fig2a + " --do X --outcome Y --given W,B"), 2);
  EXPECT_EQ(exit_status(bin + " identify --graph " + data_file("malformed_cycle") + " --do A --outcome B"),
            1);
  EXPECT_EQ(exit_status(bin + " verify --graph " + fig2a + " --do X --outcome Y --given W --models 2 --tol 1e-300"),
            3);
}

}  // namespace
}  // namespace causalid
