#include <structdet/cli.hpp>
#include <structdet/prime_sequence.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "process.hpp"

using namespace structdet;
using testing_support::lines_of;
using testing_support::run_process;

namespace {

const std::string kBinary = STRUCTDET_BINARY;

testing_support::ProcessResult structdet_cmd(const std::string& args) { return run_process(kBinary + " " + args); }

struct InProcess {
  int code;
  std::string out;
  std::string err;
};

InProcess run_in_process(std::vector<std::string> args, bool color = false) {
  std::ostringstream out, err;
  cli::Streams io{out, err, color};
  const int code = cli::run_cli(std::move(args), io);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

const char* kGoodBFile = "# A067549\n1 2\n2 5\n3 22\n4 140\n5 1448\n6 17856\n";

}  // namespace

TEST(CliEval, Examples) {
  auto r = structdet_cmd("eval --diag 1,2,4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "22\n");

  r = structdet_cmd("eval --diag 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "2\n");

  r = structdet_cmd("eval --diag 0,5 --method closed");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("zero shift not allowed for this method"), std::string::npos);
}

TEST(CliEval, AllMethodsAgree) {
  for (const char* method : {"closed", "expanded", "elimination", "bareiss"}) {
    const auto r = structdet_cmd(std::string("eval --diag 3,-2,5,7 --method ") + method);
    ASSERT_EQ(r.exit_code, 0) << method;
    EXPECT_EQ(lines_of(r.out).front(), to_string(det_expanded({3, -2, 5, 7}))) << method;
  }
}

TEST(CliEval, EliminationPrintsPivot) {
  const auto r = run_in_process({"eval", "--diag", "2,3", "--method", "elimination"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11\npivot_b 11/3\n");
}

TEST(CliEval, DumpMatrix) {
  const auto r = run_in_process({"eval", "--diag", "1,2", "--dump-matrix"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 1\n1 3\n5\n");
}

TEST(CliEval, ZeroShiftsAllowedForExpandedAndBareiss) {
  EXPECT_EQ(run_in_process({"eval", "--diag", "0,5"}).out, "5\n");
  EXPECT_EQ(run_in_process({"eval", "--diag", "0,0", "--method", "bareiss"}).out, "0\n");
  EXPECT_EQ(run_in_process({"eval", "--diag", "0,5", "--method", "elimination"}).code, 3);
}

TEST(CliEval, ParseFailures) {
  for (const char* args : {"eval --diag 1,x", "eval --diag ''", "eval --diag 1,,2", "eval", "eval --diag 1 --method lu",
                           "", "frobnicate"}) {
    const auto r = structdet_cmd(args);
    EXPECT_EQ(r.exit_code, 2) << args;
    EXPECT_FALSE(r.err.empty()) << args;
  }
}

TEST(CliSequence, CheckKnown) {
  const auto r = structdet_cmd("sequence 6 --check-known");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "2\n5\n22\n140\n1448\n17856\n");
}

TEST(CliSequence, Empty) {
  const auto r = structdet_cmd("sequence 0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
}

TEST(CliSequence, Csv) {
  const auto r = structdet_cmd("sequence 10 --format csv");
  EXPECT_EQ(r.exit_code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0], "n,p_n,P_n,D_n");
  EXPECT_EQ(lines[4], "4,7,48,140");
}

TEST(CliSequence, JsonRoundTripsThroughDirect) {
  const auto r = structdet_cmd("sequence 100 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 100u);
  for (const auto& row : rows) {
    for (const char* key : {"n", "p_n", "P_n", "D_n"}) ASSERT_TRUE(row.at(key).is_string()) << key;
    const auto n = std::stoll(row.at("n").get<std::string>());
    ASSERT_EQ(BigInt(row.at("D_n").get<std::string>()), D_direct(n)) << "n=" << n;
  }
}

TEST(CliSequence, UsageErrors) {
  EXPECT_EQ(structdet_cmd("sequence -1").exit_code, 2);
  EXPECT_EQ(structdet_cmd("sequence 3 --format xml").exit_code, 2);
  EXPECT_EQ(structdet_cmd("sequence").exit_code, 2);
}

TEST(CliVerify, Examples) {
  auto r = structdet_cmd("verify 6");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("recurrence vs direct: 6/6 agree"), std::string::npos);
  EXPECT_NE(r.out.find("recurrence vs bareiss: 6/6 agree"), std::string::npos);
  EXPECT_NE(r.out.find("n=6 D_n=17856 direct=ok bareiss=ok"), std::string::npos);

  r = structdet_cmd("verify 40 --oracle-cutoff 40 --workers 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("recurrence vs bareiss: 40/40 agree"), std::string::npos);
}

TEST(CliVerify, BFile) {
  const auto good = write_temp("structdet_good.b", kGoodBFile);
  auto r = structdet_cmd("verify 6 --bfile " + good);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("recurrence vs b-file: 6/6 agree"), std::string::npos);

  std::string tampered = kGoodBFile;
  tampered.replace(tampered.find("1448"), 4, "1449");
  const auto bad = write_temp("structdet_bad.b", tampered);
  r = structdet_cmd("verify 6 --bfile " + bad);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("first divergence at n=5"), std::string::npos);

  const auto broken = write_temp("structdet_broken.b", "1 2\n2 five\n");
  EXPECT_EQ(structdet_cmd("verify 6 --bfile " + broken).exit_code, 2);
  EXPECT_EQ(structdet_cmd("verify 6 --bfile /nonexistent/x.b").exit_code, 2);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(structdet_cmd("verify 0").exit_code, 2);
  EXPECT_EQ(structdet_cmd("verify abc").exit_code, 2);
}

TEST(CliVerify, ColorOnlyWhenRequested) {
  const auto plain = run_in_process({"verify", "3"}, false);
  EXPECT_EQ(plain.out.find('\033'), std::string::npos);
  const auto colored = run_in_process({"verify", "3"}, true);
  EXPECT_NE(colored.out.find("\033[32mPASS"), std::string::npos);
  // The binary sees NO_COLOR and a pipe.
  EXPECT_EQ(structdet_cmd("verify 3").out.find('\033'), std::string::npos);
}

TEST(CliBench, SingleRow) {
  const auto r = structdet_cmd("bench 100 --methods expanded");
  EXPECT_EQ(r.exit_code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "method,n,median_seconds");
  EXPECT_EQ(lines[1].rfind("expanded,100,", 0), 0u);
  const double t = std::stod(lines[1].substr(std::string("expanded,100,").size()));
  EXPECT_TRUE(std::isfinite(t));
  EXPECT_GE(t, 0.0);
}

TEST(CliBench, BareissGrowsWithN) {
  const auto r = structdet_cmd("bench 50,100,200 --methods expanded,bareiss");
  ASSERT_EQ(r.exit_code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 7u);
  std::vector<double> bareiss;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].rfind("bareiss,", 0) == 0) bareiss.push_back(std::stod(lines[i].substr(lines[i].rfind(',') + 1)));
  }
  ASSERT_EQ(bareiss.size(), 3u);
  EXPECT_LT(bareiss[0], bareiss[1]);
  EXPECT_LT(bareiss[1], bareiss[2]);
}

TEST(CliBench, RepeatAndCap) {
  auto r = structdet_cmd("bench 200 --repeat 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(lines_of(r.out).size(), 3u);

  r = structdet_cmd("bench 30 --methods bareiss --bareiss-cap 20");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(lines_of(r.out).size(), 1u);
  EXPECT_NE(r.err.find("skipping bareiss at n=30"), std::string::npos);

  r = structdet_cmd("bench 30 --methods bareiss --bareiss-cap 20 --force");
  EXPECT_EQ(lines_of(r.out).size(), 2u);
}

TEST(CliBench, UsageErrors) {
  EXPECT_EQ(structdet_cmd("bench 0").exit_code, 2);
  EXPECT_EQ(structdet_cmd("bench 10,x").exit_code, 2);
  EXPECT_EQ(structdet_cmd("bench 10 --methods qr").exit_code, 2);
  EXPECT_EQ(structdet_cmd("bench 10 --repeat 0").exit_code, 2);
}

TEST(CliBench, MedianOfSamples) {
  EXPECT_DOUBLE_EQ(cli::median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(cli::median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(CliBench, AllMethodsRun) {
  const auto r = structdet_cmd("bench 30 --methods closed,expanded,prefix-suffix,elimination,bareiss --repeat 1");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(lines_of(r.out).size(), 6u);
}
