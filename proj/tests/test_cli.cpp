#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using aktangent::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("aktangent_cli_" + name + "_" + std::to_string(::getpid())))
      .string();
}

const std::string kStarter = std::string(AKTANGENT_SOURCE_DIR) + "/data/starter_table.txt";

}  // namespace

TEST(Cli, CountTangent) {
  const Result r = cli({"count", "tangent", "--d", "3", "--profile", "A2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "60\n");
  EXPECT_EQ(cli({"count", "tangent", "--d", "3", "--profile", "A1"}).out, "36\n");
  EXPECT_EQ(cli({"count", "tangent", "--d", "7", "--profile", "none"}).out, "12\n");
}

TEST(Cli, CountTangentBelowBoundWarns) {
  const Result r = cli({"count", "tangent", "--d", "4", "--profile", "A1^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14184\n");
  EXPECT_NE(r.err.find("below the proven bound"), std::string::npos);
  EXPECT_EQ(cli({"count", "tangent", "--d", "4", "--profile", "A1^3", "--unordered"}).out, "2364\n");
}

TEST(Cli, CountTangentThroughTheTable) {
  // A2^2 has no closed form, so the recursion needs table data.
  const Result missing = cli({"count", "tangent", "--d", "6", "--profile", "A2^2"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("N d=6 profile=A2^2"), std::string::npos);

  const std::string path = temp_path("table");
  std::ofstream(path) << "N d=6 profile=A2^2 value=100\nNL d=6 profile=A2^2 cond=A2 value=7\n";
  const Result r = cli({"count", "tangent", "--d", "6", "--profile", "A2^2", "--table", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::to_string(10 * 100 - 2 * 3 * 7) + "\n");
  std::filesystem::remove(path);
}

TEST(Cli, CountSeveri) {
  EXPECT_EQ(cli({"count", "severi", "--d", "2", "--delta", "1"}).out, "3\n");
  EXPECT_EQ(cli({"count", "severi", "--d", "4", "--delta", "3"}).out, "675\n");
  EXPECT_EQ(cli({"count", "severi", "--d", "4", "--delta", "1", "--tangent"}).out, "144\n");
  EXPECT_EQ(cli({"count", "severi", "--d", "3", "--delta", "0", "--alpha", "1", "--beta", "0,1"}).out, "2\n");
  EXPECT_EQ(cli({"count", "severi", "--d", "3", "--delta", "0", "--beta", "1"}).code, 1);
  EXPECT_EQ(cli({"count", "severi", "--d", "3", "--delta", "0", "--beta", "x"}).code, 2);
  EXPECT_EQ(cli({"count", "severi", "--d", "3", "--delta", "0", "--tangent", "--beta", "3"}).code, 2);
}

TEST(Cli, SeveriCacheFile) {
  const std::string path = temp_path("memo");
  std::filesystem::remove(path);
  const Result first = cli({"count", "severi", "--d", "6", "--delta", "4", "--tangent", "--cache", path});
  ASSERT_EQ(first.code, 0);
  ASSERT_TRUE(std::filesystem::exists(path));
  const Result second = cli({"count", "severi", "--d", "6", "--delta", "4", "--tangent", "--cache", path});
  EXPECT_EQ(second.out, first.out);
  EXPECT_TRUE(second.err.empty());
  std::ofstream(path, std::ios::app) << "garbage\n";
  const Result third = cli({"count", "severi", "--d", "6", "--delta", "4", "--tangent", "--cache", path});
  EXPECT_EQ(third.code, 0);
  EXPECT_EQ(third.out, first.out);
  EXPECT_NE(third.err.find("ignoring cache"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, Classify) {
  const Result r = cli({"classify", "--poly", "y^2+x^3", "--point", "0,0", "--max-k", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "A2");
  EXPECT_NE(r.out.find("witness 6"), std::string::npos);
  EXPECT_EQ(first_line(cli({"classify", "--poly", "x^2y+xy^2", "--point", "0,0"}).out), "DegenerateBeyondScope");
  EXPECT_EQ(cli({"classify", "--poly", "y^2+x^3", "--point", "1,0"}).code, 1);
  EXPECT_EQ(cli({"classify", "--poly", "y^2+", "--point", "0,0"}).code, 2);
  EXPECT_EQ(cli({"classify", "--poly", "y^2", "--point", "0"}).code, 2);
}

TEST(Cli, VerifyCommands) {
  const Result pencil = cli({"verify", "pencil", "--d", "3", "--trials", "2", "--seed", "5"});
  EXPECT_EQ(pencil.code, 0);
  EXPECT_NE(pencil.out.find("PASS 2/2"), std::string::npos);
  EXPECT_NE(pencil.out.find("count=4"), std::string::npos);

  const Result kaz = cli({"verify", "kazaryan"});
  EXPECT_EQ(kaz.code, 0);
  EXPECT_NE(kaz.out.find("expected=2256 computed=2256"), std::string::npos);

  const Result chk = cli({"verify", "ch-vs-closed", "--delta-max", "4", "--extra", "1"});
  EXPECT_EQ(chk.code, 0);
  EXPECT_NE(chk.out.find("10 checks, 0 failures"), std::string::npos);

  const Result table = cli({"verify", "table", kStarter});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("5 checks, 0 failures"), std::string::npos);
}

TEST(Cli, FailedChecksExitNonzero) {
  const std::string path = temp_path("bad");
  std::ofstream(path) << "N d=3 profile=A2 value=24\nNL d=3 profile=A2 cond=A2 value=11\n";
  const Result r = cli({"verify", "table", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL table d=003 profile=A2"), std::string::npos);
  EXPECT_EQ(cli({"verify", "kazaryan", "--table", path}).code, 0);
  std::ofstream(path) << "N d=3 profile=A2 value=25\n";
  EXPECT_EQ(cli({"verify", "kazaryan", "--table", path}).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, TableCommands) {
  const Result show = cli({"table", "show", kStarter});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("N d=3 profile=A2 value=24\n"), std::string::npos);
  EXPECT_EQ(cli({"table", "invert", "--d", "3", "--profile", "A2"}).out, "12\n");
  EXPECT_EQ(cli({"table", "invert", "--d", "3", "--profile", "A2", "--plain", "24", "--tangent", "60"}).out, "12\n");
  EXPECT_EQ(cli({"table", "invert", "--d", "3", "--profile", "A2", "--tangent", "61"}).code, 1);
  EXPECT_EQ(cli({"table", "show", "/nonexistent"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"count"}).code, 2);
  EXPECT_EQ(cli({"count", "tangent", "--d", "3"}).code, 2);
  EXPECT_EQ(cli({"count", "tangent", "--d", "3", "--profile", "B2"}).code, 2);
  EXPECT_EQ(cli({"count", "tangent", "--d", "x", "--profile", "A2"}).code, 2);
  EXPECT_EQ(cli({"count", "tangent", "--d", "3", "--profile", "A2", "--bogus"}).code, 2);
  EXPECT_EQ(cli({"--format", "xml", "verify", "kazaryan"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  const Result bad = cli({"count", "tangent", "--d", "3", "--profile", "A0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("Usage"), std::string::npos);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ComputationErrorsExitOne) {
  EXPECT_EQ(cli({"count", "tangent", "--d", "0", "--profile", "A2"}).code, 1);
  EXPECT_EQ(cli({"verify", "pencil", "--d", "8"}).code, 1);
  EXPECT_EQ(cli({"count", "tangent", "--d", "5", "--profile", "A9"}).code, 1);
}

TEST(Cli, JsonCarriesTheSameNumbers) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "tangent", "--d", "18", "--profile", "A1^8"},
           {"count", "severi", "--d", "7", "--delta", "5"},
           {"table", "invert", "--d", "5", "--profile", "A1"}}) {
    const Result plain = cli(args);
    std::vector<std::string> jargs{"--format", "json"};
    jargs.insert(jargs.end(), args.begin(), args.end());
    const Result structured = cli(jargs);
    ASSERT_EQ(structured.code, 0);
    const json j = json::parse(structured.out);
    const std::string key = args[0] == "table" ? "conditioned" : "value";
    EXPECT_EQ(j.at(key).get<std::string>() + "\n", plain.out);
  }
  const json c = json::parse(cli({"--format", "json", "classify", "--poly", "y^2+x^4", "--point", "0,0"}).out);
  EXPECT_EQ(c.at("tag"), "A3");
  EXPECT_EQ(c.at("witness"), "24");

  const json k = json::parse(cli({"--format", "json", "verify", "kazaryan"}).out);
  EXPECT_EQ(k.at("failures"), 0);
  EXPECT_EQ(k.at("reports")[0].at("computed"), "2256");
  EXPECT_EQ(k.at("reports")[0].at("subchecks").size(), 2u);

  const json p = json::parse(cli({"--format", "json", "verify", "pencil", "--d", "2", "--trials", "2"}).out);
  EXPECT_EQ(p.at("trials").size(), 2u);
  EXPECT_EQ(p.at("trials")[0].at("count"), 2);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"--format", "json", "verify", "ch-vs-closed", "--delta-max", "3"};
  json a = json::parse(cli(args).out), b = json::parse(cli(args).out);
  for (auto* j : {&a, &b})
    for (auto& r : j->at("reports")) r.erase("elapsed_seconds");
  EXPECT_EQ(a, b);
  EXPECT_EQ(cli({"verify", "pencil", "--d", "3", "--trials", "3"}).out,
            cli({"verify", "pencil", "--d", "3", "--trials", "3"}).out);
}

TEST(Cli, PrintedProfilesReparse) {
  const json j = json::parse(cli({"--format", "json", "count", "tangent", "--d", "9", "--profile", "a4, A1"}).out);
  const std::string printed = j.at("profile");
  EXPECT_EQ(printed, "A1 A4");
  EXPECT_EQ(cli({"count", "tangent", "--d", "9", "--profile", printed}).out,
            cli({"count", "tangent", "--d", "9", "--profile", "a4, A1"}).out);
}
