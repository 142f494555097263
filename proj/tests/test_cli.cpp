#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cohomlab/io.hpp"

using namespace cohomlab;

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COHOMLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cohomlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenCycle) {
  ASSERT_EQ(run("gen --family cycle --size 64 --out " + path("c.json")).code, 0);
  const auto s = read_space(path("c.json"));
  EXPECT_EQ(s.size(), 64u);
  EXPECT_EQ(s.diameter(), 32.0);
}

TEST_F(Cli, GenFreeBall) {
  ASSERT_EQ(run("gen --family free_ball --rank 2 --radius 2 --out " + path("f.json")).code, 0);
  EXPECT_EQ(read_space(path("f.json")).size(), 17u);
}

TEST_F(Cli, GenInfeasibleIsConfigError) {
  EXPECT_EQ(run("gen --family random_regular --n 9 --k 3").code, 2);
  EXPECT_EQ(run("gen --family nope --size 3").code, 2);
  EXPECT_EQ(run("gen --bogus-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, GenIsByteReproducible) {
  run("gen --family random_regular --n 20 --k 3 --seed 5 --out " + path("a.json"));
  run("gen --family random_regular --n 20 --k 3 --seed 5 --out " + path("b.json"));
  EXPECT_EQ(read_text(path("a.json")), read_text(path("b.json")));
}

TEST_F(Cli, ProfileCycleMatchesClosedForm) {
  run("gen --family cycle --size 64 --out " + path("c.json"));
  const auto r = run("profile --space " + path("c.json") + " --smax 10 --r 1 --out " +
                     path("p.csv") + " --report " + path("v.json"));
  ASSERT_EQ(r.code, 0);
  std::istringstream csv(read_text(path("p.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "S,R,nu,x0,x1,exact");
  int S = 0;
  while (std::getline(csv, line)) {
    ++S;
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 6u);
    EXPECT_NEAR(std::stod(cells[2]), 2.0 / (2 * S + 1), 1e-12);
  }
  EXPECT_EQ(S, 10);
  const auto v = Json::parse(read_text(path("v.json")));
  EXPECT_EQ(v["verdicts"][0]["verdict"], "decaying");
  EXPECT_EQ(v["config"]["space"]["hash"], file_hash(path("c.json")));
}

TEST_F(Cli, ProfileCompleteGraphIsFlat) {
  const auto r = run("profile --family complete --size 9 --schedule 1,2,3 --r 1 --report " +
                     path("v.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1,1,0,"), std::string::npos);
  EXPECT_EQ(Json::parse(read_text(path("v.json")))["verdicts"][0]["verdict"], "decaying");
}

TEST_F(Cli, ProfileNeedsSchedule) {
  EXPECT_EQ(run("profile --family cycle --size 8").code, 2);
  EXPECT_EQ(run("profile --space " + path("missing.json") + " --smax 2").code, 2);
}

TEST_F(Cli, VerifyJohnsonPasses) {
  const auto r = run("verify --family cycle --size 16 --suite johnson --out " + path("r.json"));
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(read_text(path("r.json")));
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["config"]["suites"][0], "johnson");
  EXPECT_TRUE(j["config"]["space"].contains("hash"));
}

TEST_F(Cli, VerifyCounterexampleReportsTwo) {
  const auto r = run("verify --family cycle --size 16 --suite counterexample");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["suites"][0]["details"]["ds_norm"].get<double>(), 2.0);
}

TEST_F(Cli, VerifyUnknownSuite) {
  EXPECT_EQ(run("verify --family cycle --size 8 --suite frobnicate").code, 2);
}

TEST_F(Cli, VerifyViolationExitsOne) {
  // A negative tolerance cannot be met by any identity audit.
  EXPECT_EQ(run("verify --family cycle --size 6 --suite complex-identities --tol -1 --count 1").code,
            1);
}

TEST_F(Cli, VerifyIsByteReproducible) {
  const std::string args = "verify --family torus --size 4 --suite splitting --count 4 --seed 3";
  const auto a = run(args + " --workers 1");
  const auto b = run(args + " --workers 1");
  EXPECT_EQ(a.out, b.out);
  auto c = Json::parse(run(args + " --workers 3").out);
  auto ja = Json::parse(a.out);
  ja["config"].erase("workers");
  c["config"].erase("workers");
  EXPECT_EQ(ja.dump(), c.dump());
}
