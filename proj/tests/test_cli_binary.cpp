#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Runs the built rfvlc binary end to end.  RFVLC_CLI_PATH and
// RFVLC_CONFIG_DIR come from the build.

namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("rfvlc_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args, const fs::path& stdout_file = {}) {
  std::string cmd = std::string(RFVLC_CLI_PATH) + " " + args;
  cmd += stdout_file.empty() ? " >/dev/null" : " >" + stdout_file.string();
  cmd += " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_config(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string shipped(const char* name) { return std::string(RFVLC_CONFIG_DIR) + "/" + name; }

}  // namespace

TEST(CliBinary, PointSucceedsOnShippedConfig) {
  const auto out = scratch() / "point.txt";
  EXPECT_EQ(run("point --config " + shipped("reference.ini"), out), 0);
  const auto text = slurp(out);
  EXPECT_NE(text.find("p_out = "), std::string::npos);
  EXPECT_NE(text.find("floor = "), std::string::npos);
}

TEST(CliBinary, ConfigErrorsExitTwo) {
  EXPECT_EQ(run("point --config " + write_config("pt0.ini", "[vlc]\npt_w = 0\n").string()), 2);
  EXPECT_EQ(run("point --config " + write_config("fov.ini", "[vlc]\nphi_half_deg = 75\n").string()), 2);
  EXPECT_EQ(run("point --config " + write_config("bad.ini", "[vlc]\nwatts = 1\n").string()), 2);
  EXPECT_EQ(run("point --config /nonexistent/x.ini"), 2);
  EXPECT_EQ(run("sweep --config " + shipped("turbulence_baseline.ini") + " --format xml"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST(CliBinary, ErrorMessageNamesKeyPath) {
  const auto err = scratch() / "err.txt";
  const auto cfg = write_config("pt0b.ini", "[vlc]\npt_w = 0\n");
  const int status = std::system((std::string(RFVLC_CLI_PATH) + " point --config " + cfg.string() +
                                  " >/dev/null 2>" + err.string())
                                     .c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(slurp(err).find("vlc.pt_w"), std::string::npos) << slurp(err);
}

TEST(CliBinary, ValidatePassesAndNegativeControlExitsThree) {
  const auto out = scratch() / "validate.txt";
  const auto args = "validate --config " + shipped("reference.ini") + " --samples 200000 --threads 0";
  EXPECT_EQ(run(args, out), 0);
  EXPECT_EQ(slurp(out).find("FAIL"), std::string::npos) << slurp(out);
  EXPECT_EQ(run(args + " --inject-analytic-scale 2", out), 3);
  EXPECT_NE(slurp(out).find("FAIL analytic_vs_monte_carlo"), std::string::npos) << slurp(out);
}

TEST(CliBinary, SweepCsvByteIdenticalAcrossThreadCounts) {
  const auto dir = scratch();
  const auto base = "sweep --config " + shipped("turbulence_baseline.ini") + " --samples 30000 --seed 42 --batch 4096 --out ";
  ASSERT_EQ(run(base + (dir / "t1.csv").string() + " --threads 1"), 0);
  ASSERT_EQ(run(base + (dir / "t2.csv").string() + " --threads 2"), 0);
  ASSERT_EQ(run(base + (dir / "t8.csv").string() + " --threads 8"), 0);
  const auto t1 = slurp(dir / "t1.csv");
  EXPECT_FALSE(t1.empty());
  EXPECT_EQ(t1, slurp(dir / "t2.csv"));
  EXPECT_EQ(t1, slurp(dir / "t8.csv"));
  EXPECT_FALSE(fs::exists(dir / "t1.csv.partial"));
}

TEST(CliBinary, FailedSweepLeavesNoOutput) {
  const auto dir = scratch();
  const auto cfg = write_config("badaxis.ini", "[sweep]\naxis = pt_w\nstart = 0\nstop = 1\nstep = 0.5\n");
  const auto out = dir / "never.csv";
  fs::remove(out);
  EXPECT_EQ(run("sweep --config " + cfg.string() + " --out " + out.string()), 2);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(dir / "never.csv.partial"));
}

TEST(CliBinary, BaselineFlagAndJsonFormat) {
  const auto dir = scratch();
  ASSERT_EQ(run("sweep --config " + shipped("access_points.ini") + " --fso-only-baseline --format json --out " +
                (dir / "ap.json").string()),
            0);
  const auto json = slurp(dir / "ap.json");
  EXPECT_EQ(json.front(), '[');
  EXPECT_EQ(json.find("\"pout_fso_only\": null"), std::string::npos);
  ASSERT_EQ(run("sweep --config " + shipped("access_points.ini") + " --out " + (dir / "ap.csv").string()), 0);
  std::ifstream in(dir / "ap.csv");
  int rows = -1;
  for (std::string l; std::getline(in, l);) ++rows;
  EXPECT_EQ(rows, 6 * 25);
}
