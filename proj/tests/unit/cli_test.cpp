#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

namespace {

using nlohmann::json;
using rrs::testing::fixture_path;

struct Result {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rrs");
  std::ostringstream out, err;
  const int code = rrs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << j.dump();
  return path.string();
}

TEST(Cli, ValidateFixtures) {
  for (const char* name : {"M1", "B2", "G3", "P3", "D5"}) {
    const Result r = run({"validate", fixture_path(name)});
    EXPECT_EQ(r.code, 0) << name << r.err;
    const json j = r.body();
    EXPECT_EQ(j["tool"], "rrs");
    EXPECT_EQ(j["command"], "validate");
    EXPECT_TRUE(j["valid"].get<bool>()) << name;
  }
}

TEST(Cli, ValidateAgainstStricterClass) {
  const Result r = run({"validate", fixture_path("P3"), "--class", "antisym-rrs"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.body()["valid"].get<bool>());
}

TEST(Cli, ZeroFlag) {
  EXPECT_EQ(run({"validate", fixture_path("M1"), "--zero", "0", "--class", "rrs-with-0"}).code, 0);
  EXPECT_EQ(run({"validate", fixture_path("G3"), "--zero", "1", "--class", "rrs-with-0"}).code, 1);
  EXPECT_EQ(run({"validate", fixture_path("G3"), "--zero", "9"}).code, 2);
}

TEST(Cli, PropsReportsEveryStatement) {
  const Result r = run({"props", fixture_path("B2")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.body()["report"].empty());
}

TEST(Cli, DirectoidsAndQuotient) {
  const Result d = run({"directoids", fixture_path("D5")});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.body()["count"], 2);
  const Result q = run({"quotient", fixture_path("P3")});
  EXPECT_EQ(q.code, 0) << q.err;
  const json j = q.body();
  EXPECT_EQ(j["classes"], json({0, 0, 1}));
  EXPECT_EQ(j["quotient"]["size"], 2);
  EXPECT_TRUE(j["is_pocrim"].get<bool>());
  EXPECT_EQ(run({"quotient", fixture_path("P3"), "--directoid", "3"}).code, 2);
}

TEST(Cli, Induce) {
  const Result r = run({"induce", fixture_path("G3")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.body()["preordered_rrs"].get<bool>());
}

TEST(Cli, EnumerateStreamsOneLinePerModel) {
  const Result r = run({"enumerate", "--class", "rrs", "--size", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> records;
  while (std::getline(lines, line)) records.push_back(json::parse(line));
  ASSERT_EQ(records.size(), 36U);
  EXPECT_EQ(records.back()["count"], 35);
  EXPECT_EQ(records.back()["class"], "rrs");
  const Result c = run({"enumerate", "--class", "rrs", "--size", "2", "--labelled", "--count"});
  EXPECT_EQ(json::parse(c.out)["count"], 70);
}

TEST(Cli, EnumerateRejectsOversize) {
  EXPECT_EQ(run({"enumerate", "--class", "antisym-rrs", "--size", "6"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--class", "lattice", "--size", "2"}).code, 2);
}

TEST(Cli, Search) {
  const Result found = run({"search", "--class", "residuated-quasi-directoid", "--negate",
                            "(x|y)|x = x|y", "--max-size", "3"});
  EXPECT_EQ(found.code, 1) << found.err;
  const json j = found.body();
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["counterexample"]["witness"], json({0, 1}));
  const Result none =
      run({"search", "--class", "rrs", "--property", "rrs.basic.a", "--max-size", "2"});
  EXPECT_EQ(none.code, 0) << none.err;
  EXPECT_EQ(none.body()["found"], false);
  EXPECT_EQ(run({"search", "--class", "rrs", "--negate", "x = (", "--max-size", "2"}).code, 2);
}

TEST(Cli, Galois) {
  const std::string path =
      temp_file("rrs_cli_chain.json", {{"size", 3}, {"rel", {1, 1, 1, 0, 1, 1, 0, 0, 1}}});
  const Result r = run({"galois", path, "--set", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.body();
  EXPECT_TRUE(j["polarity"].get<bool>());
  EXPECT_EQ(j["star"], json({1, 2}));
  EXPECT_EQ(j["dagger"], json({0, 1}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"validate", "/nonexistent/model.json"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const std::string bad = temp_file("rrs_cli_bad.json", {{"size", 2}, {"unit", 0}});
  const Result r = run({"validate", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

}  // namespace
