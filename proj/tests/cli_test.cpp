#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the installed binary through the shell; arguments with ';' or spaces
// must be pre-quoted by the caller.
RunResult run_igi(const std::string& args) {
  static int counter = 0;
  const std::string base =
      testing::TempDir() + "igi_cli_" + std::to_string(counter++);
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  const std::string cmd = std::string(IGI_BINARY) + " " + args + " >" + out_path +
                          " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

TEST(CliRecip, PrintsPairInPointedStyle) {
  const auto r = run_igi("recip '2;15'");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "igi 2;15 0;26,40\n");
}

TEST(CliRecip, UnitReciprocal) {
  const auto r = run_igi("recip 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "igi 1 1\n");
}

TEST(CliRecip, NonRegularExitsWithDomainCode) {
  const auto r = run_igi("recip 7");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("not regular: cofactor 7"), std::string::npos);
  EXPECT_EQ(r.out, "");  // nothing reaches stdout on failure
}

TEST(CliRecip, ParseErrorExitsWithUsageCode) {
  const auto r = run_igi("recip '1,,2'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("position 2"), std::string::npos);
}

TEST(CliParse, CanonicalizesInput) {
  const auto r = run_igi("parse '0,0,2;15,0'");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "2;15\n");
}

TEST(CliFormat, IntegerStyleOnWholeNumbers) {
  EXPECT_EQ(run_igi("format '4,10' --style integer").out, "4,10\n");
  EXPECT_EQ(run_igi("format '2;15' --style integer").exit_code, 1);
}

TEST(CliVerifyPair, TrueAndFalse) {
  const auto good = run_igi("verify-pair '2;13,20' '0;27'");
  EXPECT_EQ(good.exit_code, 0);
  EXPECT_EQ(good.out, "true\n");
  const auto bad = run_igi("verify-pair '2;15' '0;26,41'");
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(bad.out, "false\n");
}

TEST(CliFamily, SingleRow) {
  const auto r = run_igi("family 3 1 --n 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "3 0;20\n");
}

TEST(CliFamily, ThirtyRowDoublingTable) {
  const auto r = run_igi("family 2 5^3 --n 30");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "4,10 0;0,14,24");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 30);
}

TEST(CliFamily, RejectsBadMultiplierBase) {
  EXPECT_EQ(run_igi("family 2 7").exit_code, 1);
  EXPECT_EQ(run_igi("family 2 7 --unsafe").exit_code, 1);
}

TEST(CliFamily, UnsafeUnlocksNonCatalogExponents) {
  EXPECT_EQ(run_igi("family 2 5^13 --n 1").exit_code, 1);
  const auto r = run_igi("family 2 5^13 --n 1 --unsafe");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(CliTable1, CsvOutput) {
  const auto r = run_igi("table1 --format csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,head,tail,family");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 31);  // header + 30 rows
}

TEST(CliTable1, ByteIdenticalAcrossRuns) {
  EXPECT_EQ(run_igi("table1").out, run_igi("table1").out);
}

TEST(CliReconstruct, TextStartsWithUnitPair) {
  const auto r = run_igi("reconstruct --format text");
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "igi 1 1");
  // The chain pipeline yields 324 candidates against the tablet's 157, so
  // the clean-run exit stays at the domain code until the counts agree.
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("entries: 324 (expected 157)"), std::string::npos);
  EXPECT_NE(r.err.find("mismatches: 0"), std::string::npos);
}

TEST(CliReconstruct, ExternalGoldenFile) {
  const std::string path = testing::TempDir() + "igi_golden.json";
  {
    std::ofstream out(path);
    out << R"({"entries":[{"head":"2;15","tail":"0;26,40"}]})";
  }
  const auto r = run_igi("reconstruct --golden " + path + " --format jsonl");
  EXPECT_NE(r.err.find("golden pairs matched: 1/1"), std::string::npos);
  std::remove(path.c_str());
}

TEST(CliReconstruct, MissingGoldenFileIsUsageError) {
  EXPECT_EQ(run_igi("reconstruct --golden /nonexistent/golden.json").exit_code, 1);
}

TEST(CliGeneral, NoSubcommandIsUsageError) {
  EXPECT_EQ(run_igi("").exit_code, 1);
  EXPECT_EQ(run_igi("--help").exit_code, 0);
}

}  // namespace
