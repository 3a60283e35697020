#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ordamalg/text_format.hpp"
#include "ordamalg_cli/cli.hpp"

namespace ordamalg {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ordamalg_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("A.txt",
          "structure A\n"
          "elements: a 0\n"
          "order: linear a 0\n"
          "op f kind=preserving: a->0 0->0\n"
          "end\n");
    write("B.txt",
          "structure B\n"
          "elements: b 0\n"
          "order: linear b 0\n"
          "op f kind=preserving: b->b 0->0\n"
          "end\n");
    write("bad.txt",
          "structure X\n"
          "elements: x y\n"
          "order: sideways x y\n"
          "end\n");
    write("A2.txt",
          "structure A\n"
          "elements: a 0\n"
          "order: linear a 0\n"
          "op f kind=preserving: a->0 0->0\n"
          "op h kind=preserving: a->a 0->0\n"
          "end\n");
    write("B2.txt",
          "structure B\n"
          "elements: b 0\n"
          "order: linear b 0\n"
          "op f kind=preserving: b->b 0->0\n"
          "op h kind=preserving: b->0 0->0\n"
          "end\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

TEST_F(CliTest, CheckReportsMembership) {
  const auto r = run_cli({"check", path("A.txt"), "--class", "lo_p"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("is in class lo_p"), std::string::npos);
  EXPECT_EQ(run_cli({"check", path("A.txt"), "--class", "lo_r"}).code, cli::kInputError);
}

TEST_F(CliTest, ParseErrorsNameTheLine) {
  const auto r = run_cli({"check", path("bad.txt")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, AmalgamatePrintsTheStructure) {
  const auto r = run_cli({"amalgamate", "--class", "lo_p", path("A.txt"), path("B.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Structure D = parse_structure(r.out);
  std::vector<std::string> asc;
  for (ElemId e : D.ascending()) asc.push_back(D.element(e));
  EXPECT_EQ(asc, (std::vector<std::string>{"b", "a", "0"}));
  EXPECT_EQ(r.out.find("map:"), std::string::npos);
  const auto with_maps = run_cli({"amalgamate", "--class", "lo_p", "--emit-embeddings", path("A.txt"), path("B.txt")});
  EXPECT_NE(with_maps.out.find("# B -> D\nmap: 0->0 b->b\n"), std::string::npos) << with_maps.out;
}

TEST_F(CliTest, AmalgamateWritesAFile) {
  ASSERT_EQ(run_cli({"amalgamate", "--class", "lo_p", path("A.txt"), path("B.txt"), "-o", path("D.txt")}).code,
            cli::kOk);
  std::ifstream in(path("D.txt"));
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(parse_structure(text.str()).size(), 3U);
}

TEST_F(CliTest, UnsupportedClass) {
  const auto r = run_cli({"amalgamate", "--class", "lo(f:preserving,h:preserving)", path("A2.txt"), path("B2.txt")});
  EXPECT_EQ(r.code, cli::kUnsupported);
  EXPECT_NE(r.err.find("thm31_c_i"), std::string::npos) << r.err;
}

TEST_F(CliTest, OracleModes) {
  const auto sap = run_cli({"oracle", "--class", "lo_p", path("A.txt"), path("B.txt")});
  EXPECT_EQ(sap.code, cli::kOk);
  EXPECT_NE(sap.out.find("# verdict: StrongAmalgam"), std::string::npos) << sap.out;
  const auto none = run_cli({"oracle", "--class", "lo(f:preserving,h:preserving)", "--mode", "ap", "--max-extra",
                             "1", path("A2.txt"), path("B2.txt")});
  EXPECT_EQ(none.code, cli::kNotFound);
  EXPECT_NE(none.out.find("# verdict: NoneWithinBounds"), std::string::npos) << none.out;
  EXPECT_EQ(run_cli({"oracle", "--class", "lo_p", "--mode", "maybe", path("A.txt"), path("B.txt")}).code,
            cli::kInputError);
}

TEST_F(CliTest, Counterexamples) {
  const auto list = run_cli({"counterexample", "list"});
  EXPECT_EQ(list.code, cli::kOk);
  EXPECT_NE(list.out.find("thm43_b_iv"), std::string::npos);
  const auto show = run_cli({"counterexample", "show", "thm31_b_sap", "--level", "2"});
  EXPECT_EQ(show.code, cli::kOk);
  EXPECT_EQ(parse_structures(show.out).size(), 3U);
  const auto verify = run_cli({"counterexample", "verify", "thm31_c_i"});
  EXPECT_EQ(verify.code, cli::kOk);
  EXPECT_NE(verify.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run_cli({"counterexample", "verify", "nope"}).code, cli::kInputError);
}

TEST_F(CliTest, ExportDot) {
  const auto r = run_cli({"export-dot", path("A.txt")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("digraph \"A\" {\n", 0), 0U);
  EXPECT_NE(r.out.find("  \"a\" -> \"0\";\n"), std::string::npos);
}

TEST_F(CliTest, FraisseReportsBothChecks) {
  const auto r = run_cli({"fraisse", "--class", "lo_p", "--cond", "iter_eq f 2 1 every", "--steps", "1",
                          "--check-level", "2"});
  EXPECT_NE(r.out.find("# stages: 1 "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("# previous stage into final stage: PASS"), std::string::npos) << r.out;
  EXPECT_TRUE(r.code == cli::kOk || r.code == cli::kNotFound);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"amalgamate", path("A.txt")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"check", path("missing.txt")}).code, cli::kInputError);
}

}  // namespace
}  // namespace ordamalg
