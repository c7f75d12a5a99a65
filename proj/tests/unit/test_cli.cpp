#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "hyperstream/edge_stream.hpp"
#include "hyperstream/errors.hpp"
#include "hyperstream/records.hpp"

using namespace hyperstream;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperstream");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hs_cli_" + name)).string();
}

std::string first_line(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

}  // namespace

TEST(Sweep, ParseAndExpand) {
  const auto s = cli::parse_sweep("k=3;m=10,100; n = 60");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1].first, "m");
  EXPECT_EQ(s[1].second, (std::vector<std::string>{"10", "100"}));
  const auto grid = cli::expand_sweep(cli::parse_sweep("a=1,2;b=x,y,z"));
  ASSERT_EQ(grid.size(), 6u);
  EXPECT_EQ(grid[0].at("a"), "1");
  EXPECT_EQ(grid[1].at("b"), "y");
  EXPECT_EQ(grid[3].at("a"), "2");
  EXPECT_THROW(cli::parse_sweep("k"), ConfigError);
  EXPECT_THROW(cli::parse_sweep("k=1;k=2"), ConfigError);
  EXPECT_THROW(cli::parse_sweep("k="), ConfigError);
}

TEST(Cli, DefaultSeedFromEnvironment) {
  ::setenv("HYPERSTREAM_SEED", "77", 1);
  EXPECT_EQ(cli::default_seed(), 77u);
  ::unsetenv("HYPERSTREAM_SEED");
  EXPECT_EQ(cli::default_seed(), 1u);
}

TEST(Cli, GenerateExamples) {
  const auto f = temp_path("complete.txt");
  const Result r = run({"generate", "--family", "complete", "--k", "3", "--n", "5", "--out", f});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(first_line(f), "3 5 10");

  const auto g = temp_path("disj.txt");
  const Result d =
      run({"generate", "--family", "lb-disj", "--k", "3", "--n", "2", "--x-seed", "1", "--y-seed", "2", "--out", g});
  ASSERT_EQ(d.code, cli::kOk) << d.err;
  const EdgeStream s = open_stream(g);
  EXPECT_EQ(s.m(), json::parse(d.out).at("m").get<std::size_t>());

  EXPECT_EQ(run({"generate", "--family", "complete", "--n", "5", "--out", f}).code, cli::kUsage);
  EXPECT_EQ(run({"generate", "--family", "grid", "--k", "3", "--n", "5", "--out", f}).code, cli::kUsage);
}

TEST(Cli, ExactExamples) {
  const auto f = temp_path("exact.txt");
  ASSERT_EQ(run({"generate", "--family", "complete", "--k", "3", "--n", "5", "--out", f}).code, cli::kOk);
  const Result r = run({"exact", "--in", f});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("T_k").get<int>(), 5);

  const auto empty = temp_path("empty.txt");
  std::ofstream(empty) << "3 4 0\n";
  const Result e = run({"exact", "--in", empty});
  ASSERT_EQ(e.code, cli::kOk) << e.err;
  EXPECT_EQ(json::parse(e.out).at("T_k").get<int>(), 0);

  const auto bad = temp_path("bad.txt");
  std::ofstream(bad) << "1 2 3\n1 q 3\n";
  const Result b = run({"exact", "--in", bad});
  EXPECT_EQ(b.code, cli::kInputError);
  EXPECT_NE(b.err.find("2"), std::string::npos);
  EXPECT_EQ(run({"exact", "--in", temp_path("missing.txt")}).code, cli::kInputError);
}

TEST(Cli, EstimateExamples) {
  const auto zero = temp_path("zero.txt");
  std::ofstream(zero) << "3 6 3\n1 2 3\n1 2 4\n4 5 6\n";
  const Result r = run({"estimate", "--in", zero, "--algo", "shadow", "--k", "3", "--T", "1", "--eps", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const RunRecord rec = parse_record(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(rec.estimate, 0.0);
  EXPECT_EQ(rec.passes, 2);

  EXPECT_EQ(run({"estimate", "--in", zero, "--algo", "onepass", "--T", "1", "--delta-e", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"estimate", "--in", zero, "--algo", "fast", "--T", "1"}).code, cli::kUsage);

  const auto f = temp_path("est.txt");
  ASSERT_EQ(run({"generate", "--family", "complete", "--k", "3", "--n", "6", "--out", f}).code, cli::kOk);
  const std::vector<std::string> args{"estimate", "--in", f, "--algo", "abundant", "--T", "15", "--eps", "0.5",
                                      "--seed", "4", "--exact"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  RunRecord ra = parse_record(a.out.substr(0, a.out.find('\n')));
  RunRecord rb = parse_record(b.out.substr(0, b.out.find('\n')));
  EXPECT_EQ(ra.exact_T, 15u);
  EXPECT_EQ(ra.estimate, rb.estimate);
  ra.wall_time_s = rb.wall_time_s = 0;
  EXPECT_EQ(ra, rb);
}

TEST(Cli, VerifyExamples) {
  const auto f = temp_path("simplex.txt");
  std::ofstream(f) << "3 4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
  const Result r = run({"verify", "--in", f});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_NE(r.out.find("OK"), std::string::npos);
  const auto big = temp_path("big.txt");
  ASSERT_EQ(run({"generate", "--family", "random", "--k", "3", "--n", "40", "--m", "50", "--out", big}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--in", big}).code, cli::kResourceError);
  EXPECT_EQ(run({"verify"}).code, cli::kUsage);
}

TEST(Cli, BenchExamples) {
  const auto out = temp_path("bench.jsonl");
  const Result r = run({"bench", "--sweep", "family=complete;k=3;n=6;eps=1", "--algos", "shadow", "--runs", "1",
                        "--out", out});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::ifstream in(out);
  std::vector<RunRecord> records;
  for (std::string line; std::getline(in, line);) records.push_back(parse_record(line));
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].algorithm, "shadow");
  EXPECT_EQ(records[0].T, 15.0);

  const Result grid = run({"bench", "--sweep", "family=random;k=3;n=20;m=100,300;T=1;eps=1", "--algos",
                           "simplest,onepass", "--runs", "2"});
  ASSERT_EQ(grid.code, cli::kOk) << grid.err;
  std::istringstream lines(grid.out);
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    const RunRecord rec = parse_record(line);
    EXPECT_FALSE(rec.error.has_value()) << *rec.error;
    EXPECT_GT(rec.space_peak_words, 0u);
    ++count;
  }
  EXPECT_EQ(count, 8);
  EXPECT_EQ(run({"bench", "--sweep", "family=complete;k=3;n=6", "--algos", "fast"}).code, cli::kUsage);
}
