#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "alcnr/cli.hpp"

namespace alcnr {
namespace {

const std::string kEx21 = std::string(ALCNR_TEST_DATA_DIR) + "/example21.kb";
const std::string kEx33 = std::string(ALCNR_TEST_DATA_DIR) + "/example33.kb";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "alcnr");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Example21Queries) {
  EXPECT_EQ(run({"check-sat", kEx21}).out, "SAT\n");
  Result student = run({"instance", kEx21, "john", "Student"});
  EXPECT_EQ(student.out, "true\n");
  EXPECT_EQ(student.code, cli::kPositive);
  Result prof = run({"instance", kEx21, "john", "Prof"});
  EXPECT_EQ(prof.out, "false\n");
  EXPECT_EQ(prof.code, cli::kNegative);
  Result sub = run({"subsumes", kEx21, "Student", "Prof"});
  EXPECT_EQ(sub.out, "false\n");
  EXPECT_EQ(sub.code, cli::kNegative);
  Result csat = run({"concept-sat", kEx21, "(and Prof (atmost 1 DEGREE))"});
  EXPECT_EQ(csat.out, "UNSAT\n");
  EXPECT_EQ(csat.code, cli::kNegative);
  EXPECT_EQ(run({"instances", kEx21, "Student"}).out, "john\n");
}

TEST(Cli, Example33CheckSat) {
  Result r = run({"check-sat", kEx33});
  EXPECT_EQ(r.out, "SAT\n");
  EXPECT_EQ(r.code, cli::kPositive);
}

TEST(Cli, ReadsStandardInput) {
  EXPECT_EQ(run({"check-sat", "-"}, "(instance a BOTTOM)").out, "UNSAT\n");
}

TEST(Cli, ModelPassesCheckModel) {
  Result model = run({"model", kEx33});
  ASSERT_EQ(model.code, cli::kPositive);
  Result check = run({"check-model", kEx33, "-"}, model.out);
  EXPECT_EQ(check.out, "valid\n");
  EXPECT_EQ(check.code, cli::kPositive);
  Result bad = run({"check-model", kEx33, "-"},
                   "domain: p s\nindividual peter = p\nindividual susan = s\n"
                   "concept Italian = {s}\nrole FRIEND = {(p,s)}\n");
  EXPECT_EQ(bad.out, "invalid\n");
  EXPECT_EQ(bad.code, cli::kNegative);
}

TEST(Cli, ModelOfUnsatKb) {
  Result r = run({"model", "-"}, "(instance a BOTTOM)");
  EXPECT_EQ(r.out, "UNSAT\n");
  EXPECT_EQ(r.code, cli::kNegative);
}

TEST(Cli, TraceEndsWithResult) {
  Result r = run({"trace", kEx33});
  EXPECT_EQ(r.code, cli::kPositive);
  EXPECT_NE(r.out.find("step 1: "), std::string::npos);
  EXPECT_NE(r.out.find(": block on _v1 | witness: _v0"), std::string::npos);
  EXPECT_TRUE(r.out.ends_with("result: SAT\n"));
}

TEST(Cli, TraceFile) {
  const std::string path = ::testing::TempDir() + "alcnr_trace.txt";
  Result r = run({"--trace-file", path, "check-sat", kEx33});
  EXPECT_EQ(r.out, "SAT\n");
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"trace", kEx33}).out);
  std::remove(path.c_str());
}

TEST(Cli, TransformOutputReparses) {
  Result r = run({"transform", kEx33});
  ASSERT_EQ(r.code, cli::kPositive);
  EXPECT_EQ(run({"check-sat", "-"}, r.out).out, "SAT\n");
}

TEST(Cli, GuardGivesUnknown) {
  Result r = run({"--max-vars", "3", "check-sat", "-"}, "(instance a (atleast 10 R))");
  EXPECT_EQ(r.out, "UNKNOWN\n");
  EXPECT_EQ(r.code, cli::kUnknown);
  EXPECT_NE(r.err.find("variable guard"), std::string::npos);
  Result inst = run({"--max-vars", "3", "instance", "-", "a", "A"}, "(instance a (atleast 10 R))");
  EXPECT_EQ(inst.out, "unknown\n");
  EXPECT_EQ(inst.code, cli::kUnknown);
}

TEST(Cli, OracleCheckPasses) {
  Result r = run({"--oracle-check", "3", "concept-sat", kEx21, "(and Prof (atmost 1 DEGREE))"});
  EXPECT_EQ(r.out, "UNSAT\n");
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_EQ(run({"--oracle-check", "3", "check-sat", kEx33}).code, cli::kPositive);
}

TEST(Cli, InputErrors) {
  Result parse = run({"check-sat", "-"}, "(implies A\n  (and B");
  EXPECT_EQ(parse.code, cli::kInputError);
  EXPECT_NE(parse.err.find("<stdin>:"), std::string::npos);
  EXPECT_EQ(run({"check-sat", "/nonexistent/file.kb"}).code, cli::kInputError);
  EXPECT_EQ(run({"instance", kEx21, "mary", "Student"}).code, cli::kInputError);
  EXPECT_EQ(run({"concept-sat", kEx21, "(and"}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate", kEx21}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"--max-vars", "x", "check-sat", kEx21}).code, cli::kInputError);
}

TEST(Cli, HelpExitsCleanly) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, cli::kPositive);
  EXPECT_NE(r.out.find("check-sat"), std::string::npos);
  EXPECT_EQ(r.out.find("check-model"), std::string::npos);
}

TEST(Cli, OutputIsStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"model", kEx21}, {"trace", kEx21}, {"transform", kEx21},
        {"instances", kEx21, "TOP"}}) {
    Result a = run(args);
    Result b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

}  // namespace
}  // namespace alcnr
