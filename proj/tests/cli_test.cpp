#include <sstream>

#include "cli.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hang/io.hpp"
#include "json.hpp"

namespace {

using testing::HasSubstr;
using testing::Not;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hangable");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = hang::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kExample = "5 6\n# labels: a b c d e\n0 1\n0 3\n1 3\n1 2\n2 3\n2 4\n";
const char* kDiamond = "4 5\n# labels: a b c d\n0 1\n0 3\n1 3\n1 2\n2 3\n";

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST(Analyze, HangableWorkedExample) {
  const auto r = run({"analyze", "-"}, kExample);
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_THAT(r.out, HasSubstr("n = 5, m = 6\n"));
  EXPECT_THAT(r.out, HasSubstr("e(a) = 3, P(a) = {e}\n"));
  EXPECT_THAT(r.out, HasSubstr("P(G) = {a,e}\n"));
  EXPECT_THAT(r.out, HasSubstr("diameter: 3\n"));
  EXPECT_THAT(r.out, HasSubstr("hangable: yes\n"));
  EXPECT_THAT(r.out, Not(HasSubstr("witness")));
}

TEST(Analyze, NonHangableReportsWitness) {
  const auto r = run({"analyze", "-"}, kDiamond);
  EXPECT_EQ(r.code, hang::cli::kNotHangable);
  EXPECT_THAT(r.out, HasSubstr("hangable: no\n"));
  EXPECT_THAT(r.out, HasSubstr("witness: v = b, u = d"));
  EXPECT_THAT(r.out, HasSubstr("triple witness: v = b, u = d, w = a"));
}

TEST(Analyze, StructuredOutput) {
  const auto r = run({"--format", "structured", "analyze", "-"}, kDiamond);
  EXPECT_EQ(r.code, hang::cli::kNotHangable);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hangable"], false);
  EXPECT_EQ(j["witness"]["v"], "b");
  EXPECT_EQ(j["periphery"], nlohmann::json::array({"a", "c"}));
  EXPECT_EQ(j["triple_check"]["hangable"], false);
}

TEST(Analyze, ErrorExitCodes) {
  EXPECT_EQ(run({"analyze", "-"}, "A?\n").code, hang::cli::kDisconnected);
  const auto bad = run({"analyze", "-"}, "!!\n");
  EXPECT_EQ(bad.code, hang::cli::kBadInput);
  EXPECT_THAT(bad.err, HasSubstr("offset 0"));
  EXPECT_EQ(run({"analyze", "/nonexistent/file"}).code, hang::cli::kBadInput);
  EXPECT_EQ(run({"analyze", "-"}, "3 2\n0 1\n").code, hang::cli::kBadInput);
  EXPECT_EQ(run({"analyze", "-"}, "?\n").code, hang::cli::kRefused);
  EXPECT_EQ(run({"no-such-command"}).code, hang::cli::kBadInput);
  EXPECT_EQ(run({"analyze", "cycle:2"}).code, hang::cli::kBadInput);
}

TEST(Analyze, QuietKeepsExitCode) {
  const auto r = run({"-q", "analyze", "-"}, kDiamond);
  EXPECT_EQ(r.code, hang::cli::kNotHangable);
  EXPECT_TRUE(r.out.empty());
}

TEST(Product, CartesianOracleCheckPasses) {
  const auto r = run({"product", "cartesian", "path:3", "path:4", "--oracle-check"});
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_EQ(count(r.out, "# PASS"), 5);
  EXPECT_THAT(r.out, HasSubstr("# 11 ↦ (2,3)"));
  EXPECT_THAT(r.out, HasSubstr("12 17\n"));
}

TEST(Product, CoronaOracleCheckPasses) {
  const auto r = run({"product", "corona", "cycle:5", "complete:2", "--oracle-check"});
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_EQ(count(r.out, "# PASS"), 4);
}

TEST(Product, CoronaPreconditionRefused) {
  const auto r = run({"product", "corona", "complete:1", "complete:2", "--oracle-check"});
  EXPECT_EQ(r.code, hang::cli::kRefused);
  EXPECT_THAT(r.out, HasSubstr("# ERROR"));
  EXPECT_THAT(r.out, HasSubstr("3 3\n"));  // the construction is still printed
}

TEST(Product, JoinGraph6AndPredicate) {
  const auto r = run({"--format", "graph6", "product", "join", "complete:2", "complete:2"});
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_EQ(r.out, "C~\n");
  const auto c = run({"product", "join", "complete:1", "path:3", "--oracle-check"});
  EXPECT_EQ(c.code, hang::cli::kOk);
  EXPECT_THAT(c.out, HasSubstr("# PASS join hangability criterion"));
}

TEST(Embed, SplitConeForDiamond) {
  const auto r = run({"embed", "-"}, kDiamond);
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_THAT(r.out, HasSubstr("# branch: split-cone"));
  EXPECT_THAT(r.out, HasSubstr("5 7\n"));
  const auto again = run({"analyze", "-"}, r.out);
  EXPECT_EQ(again.code, hang::cli::kOk);
  EXPECT_THAT(again.out, HasSubstr("self-centered: yes"));
}

TEST(Power, SmallestAndExplicit) {
  const auto s = run({"power", "-", "--smallest"}, kDiamond);
  EXPECT_EQ(s.code, hang::cli::kOk);
  EXPECT_EQ(s.out, "k = 2\n");
  const auto k = run({"--format", "graph6", "power", "path:4", "-k", "3"});
  EXPECT_EQ(k.out, "C~\n");
  EXPECT_EQ(run({"power", "path:4"}).code, hang::cli::kBadInput);
}

TEST(Blocks, WorkedExample) {
  const auto r = run({"blocks", "-"}, kExample);
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_EQ(r.out, "block: a b c d\nblock: c e\ncut vertices: c\nblock graph: no\ntree: no\n");
}

TEST(Generate, GridPipesIntoAnalyze) {
  const auto g = run({"generate", "grid", "3", "4"});
  EXPECT_EQ(g.code, hang::cli::kOk);
  const auto a = run({"analyze", "-"}, g.out);
  EXPECT_EQ(a.code, hang::cli::kOk);
  EXPECT_THAT(a.out, HasSubstr("hangable: yes"));
  EXPECT_EQ(run({"--format", "graph6", "generate", "cycle:5"}).out, "Dhc\n");
  EXPECT_EQ(run({"generate", "wheel", "5"}).code, hang::cli::kBadInput);
}

TEST(Classify, TsvAndJsonLines) {
  const auto r = run({"classify"}, "Dhc\nA?\nnope\n");
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_EQ(count(r.out, "\n"), 4);
  EXPECT_THAT(r.out, HasSubstr("2\tA?\t2\t0\tno"));
  const auto j = run({"--format", "structured", "classify", "--jobs", "3"}, "Dhc\nA?\nnope\n");
  std::istringstream lines(j.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto rec = nlohmann::json::parse(line);
    EXPECT_EQ(rec["index"], ++n);
  }
  EXPECT_EQ(n, 3);
}

TEST(SubgraphSearch, CycleAndBudget) {
  const auto r = run({"subgraph-search", "cycle:4", "-m", "4"});
  EXPECT_EQ(r.code, hang::cli::kOk);
  EXPECT_THAT(r.out, HasSubstr("3\t4\t4\t4\n"));
  const auto b = run({"--budget", "5", "subgraph-search", "cycle:4", "-m", "4"});
  EXPECT_EQ(b.code, hang::cli::kRefused);
}

TEST(Determinism, RepeatedRunsMatch) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"product", "corona", "cycle:4", "path:3"},
           {"embed", "complete:1"},
           {"--format", "structured", "analyze", "hypercube:3"}}) {
    const auto first = run(args);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out);
  }
}

}  // namespace
