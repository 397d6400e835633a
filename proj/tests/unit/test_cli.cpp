#include "commands.hpp"

#include "cayleysum/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace cayleysum;
using cayleysum::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const auto result = run_command(args, out, err);
  return {result.exit_code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "cayleysum_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, PhiPrintsTheValue) {
  const auto r = run({"phi", "--ell", "3", "--n", "5,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "100\n");
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"phi", "--n", "5,5"}).code, 2);
  EXPECT_EQ(run({"phi", "--ell", "x", "--n", "5,5"}).code, 2);
  EXPECT_EQ(run({"phi", "--ell", "1", "--n", "5,5"}).code, 2);
  EXPECT_EQ(run({"bound", "--kind", "bogus"}).code, 2);
  EXPECT_EQ(run({"hull", "--inputs", "/nonexistent/points.json"}).code, 2);
}

TEST(Cli, BoundKinds) {
  auto r = run({"bound", "--kind", "two", "--k", "3", "--d", "3", "--n", "4,4"});
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["outputs"]["value"], "18");

  r = run({"bound", "--kind", "trivial", "--k", "1", "--d", "3", "--n", "3,3,3"});
  EXPECT_EQ(Json::parse(r.out)["outputs"]["value"], "81");

  r = run({"bound", "--kind", "three", "--m", "5,4"});
  j = Json::parse(r.out);
  EXPECT_EQ(j["outputs"]["values"]["f1"], "47");

  r = run({"bound", "--kind", "zonotope", "--l", "0", "--n", "3", "--d", "2"});
  EXPECT_EQ(Json::parse(r.out)["outputs"]["value"], "6");

  r = run({"bound", "--kind", "f0-many", "--d", "3", "--n", "4,4,4"});
  j = Json::parse(r.out);
  EXPECT_EQ(j["outputs"]["values"]["sanyal"], "63");
  EXPECT_EQ(j["outputs"]["values"]["weibel"], "38");
}

TEST(Cli, HullAndMinksumFromFiles) {
  TempDir dir;
  write_json_file(dir.file("square.json"),
                  point_set_to_json(PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  write_json_file(dir.file("tri.json"), point_set_to_json(PointSet(2, {{0, 0}, {2, 0}, {0, 2}})));
  write_json_file(dir.file("neg.json"), point_set_to_json(PointSet(2, {{0, 0}, {-2, 0}, {0, -2}})));

  for (const char* method : {"dd", "exhaustive"}) {
    const auto r = run({"hull", "--inputs", dir.file("square.json"), "--method", method});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["outputs"]["lattice"]["f_vector"], Json({4, 4}));
  }

  const auto out = dir.file("fvec.json");
  const auto r = run({"minksum", "--inputs", dir.file("tri.json"), dir.file("neg.json"), "--method",
                      "both", "--out", out});
  EXPECT_EQ(r.code, 0);
  const auto j = read_json_file(out);
  EXPECT_EQ(j["outputs"]["cayley_f_vector"], Json({6, 6}));
  EXPECT_EQ(j["outputs"]["direct_f_vector"], Json({6, 6}));
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, VerifyTightReportsTheVertexBound) {
  TempDir dir;
  const auto report = dir.file("report.json");
  const auto r = run({"verify-tight", "--d", "3", "--r", "2", "--n", "4,4", "--report", report});
  EXPECT_EQ(r.code, 0);
  const auto j = read_json_file(report);
  EXPECT_EQ(j["outputs"]["direct_f_vector"][0], 16);
  EXPECT_EQ(j["outputs"]["phi"][0], "16");
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, ExhaustedSearchIsACheckFailure) {
  const auto r = run({"verify-tight", "--d", "5", "--r", "2", "--n", "5,5", "--max-halvings", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("tau_star_found"), std::string::npos);
}

TEST(Cli, ConstructWritesAFamily) {
  TempDir dir;
  const auto out = dir.file("family.json");
  const auto r = run({"construct", "--d", "3", "--r", "2", "--n", "3,3", "--out", out});
  EXPECT_EQ(r.code, 0);
  const auto j = read_json_file(out);
  const auto family = family_from_json(j["outputs"]["family"]);
  EXPECT_EQ(family.sizes(), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(minksum_direct(family).front(), 9u);
}

TEST(Cli, DeltaFindsTauZero) {
  TempDir dir;
  const DeltaSpec spec{{2, 2}, {1, 0}, {{1, 3}, {2, 7}}};
  write_json_file(dir.file("spec.json"), delta_spec_to_json(spec));
  const auto r = run({"delta", "--spec", dir.file("spec.json"), "--find-tau0"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["outputs"]["tau0"], "1");
  EXPECT_EQ(j["outputs"]["leading_term"]["theta"], 1);
}

TEST(Cli, SelftestPasses) {
  const auto r = run({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["pass"], true);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"verify-tight", "--d", "3", "--r", "2", "--n", "3,4"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> self{"selftest", "--seed", "99"};
  EXPECT_EQ(run(self).out, run(self).out);
}
