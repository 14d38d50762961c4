#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "skypath/feasibility.hpp"
#include "skypath/io.hpp"

namespace skypath::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome skypath(std::vector<std::string> args) {
  args.insert(args.begin(), "skypath");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("skypath_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ASSERT_EQ(skypath({"env-gen", "--preset", "paper-uma", "--out", path("env.json")}).code, kExitOk);
    ASSERT_EQ(skypath({"map-build", "--env", path("env.json"), "--out-dir", path("maps")}).code, kExitOk);
  }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }
  static fs::path dir_;
};

fs::path CliTest::dir_;

TEST_F(CliTest, EnvGenWritesPaperScene) {
  const Outcome o = skypath({"env-gen", "--preset", "paper-uma", "--seed", "42", "--out", path("env42.json")});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const Environment env = io::read_environment(path("env42.json"));
  EXPECT_EQ(env.region.cells_per_side(), 126);
  EXPECT_EQ(env.gbss.size(), 6U);
  EXPECT_EQ(env.obstacles.size(), 30U);
  EXPECT_NE(o.out.find("D=126"), std::string::npos);
  ASSERT_EQ(skypath({"env-gen", "--preset", "paper-uma", "--seed", "42", "--out", path("env42b.json")}).code, kExitOk);
  EXPECT_EQ(io::read_text(path("env42.json")), io::read_text(path("env42b.json")));
}

TEST_F(CliTest, MinimalConfigAndSingleMap) {
  io::write_text(path("minimal.json"),
                 R"({"L": 100, "delta_d": 5, "H": 90, "gbs_count": 1, "obstacle_count": 0})");
  ASSERT_EQ(skypath({"env-gen", "--config", path("minimal.json"), "--seed", "3", "--out", path("min_env.json")}).code,
            kExitOk);
  ASSERT_EQ(skypath({"map-build", "--env", path("min_env.json"), "--out-dir", path("min_maps"), "--render"}).code,
            kExitOk);
  const RadioMap single = io::read_radio_map(path("min_maps/gbs_1.rmap"));
  const RadioMap best = io::read_radio_map(path("min_maps/superposed.rmap"));
  EXPECT_TRUE(std::equal(single.values().begin(), single.values().end(), best.values().begin()));
  EXPECT_TRUE(fs::exists(path("min_maps/superposed.pgm")));
}

TEST_F(CliTest, MapBuildWritesSixMaps) {
  const RadioMapSet maps = io::read_radio_map_dir(path("maps"));
  ASSERT_EQ(maps.size(), 6U);
  for (const RadioMap& m : maps.maps()) EXPECT_EQ(m.size(), 126);
  ASSERT_EQ(skypath({"map-build", "--env", path("env.json"), "--out-dir", path("maps2")}).code, kExitOk);
  for (int id = 1; id <= 6; ++id) {
    const auto name = io::radio_map_filename(id).string();
    EXPECT_EQ(io::read_bytes(dir_ / "maps" / name), io::read_bytes(dir_ / "maps2" / name));
  }
}

TEST_F(CliTest, PlanExitCodes) {
  const Outcome ok = skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-42.5", "--kappa", "1", "--out",
                              path("path.json"), "--render", path("path.svg"), "--speed", "10"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_TRUE(fs::exists(path("path.json")));
  EXPECT_NE(io::read_text(path("path.svg")).find("<polyline"), std::string::npos);

  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-10"}).code, kExitInfeasible);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-45", "--kappa", "4"}).code, kExitUsage);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-45", "--kappa", "5", "--remainder",
                     "reject"}).code,
            kExitUsage);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-45", "--kappa", "5"}).code, kExitOk);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "abc"}).code, kExitUsage);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("nowhere"), "--target-db", "-45"}).code, kExitUsage);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-45", "--from", "1,2,3"}).code, kExitUsage);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-45", "--speed", "-1"}).code, kExitUsage);
  EXPECT_EQ(skypath({"bogus"}).code, kExitUsage);
}

TEST_F(CliTest, PlanEndpointInfeasible) {
  // Find a fine cell below -44 dB and start there.
  const RadioMap best = io::read_radio_map(path("maps/superposed.rmap"));
  std::optional<CellIndex> weak;
  for (int i = 1; i <= best.size() && !weak; ++i) {
    for (int j = 1; j <= best.size() && !weak; ++j) {
      if (best.at(i, j) < -44.0F) weak = CellIndex{i, j};
    }
  }
  ASSERT_TRUE(weak);
  const Point2 u = grid_point(*weak, best.region());
  const std::string from = io::format_double(u.x) + "," + io::format_double(u.y);
  EXPECT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-44", "--from", from}).code,
            kExitEndpointInfeasible);
}

TEST_F(CliTest, SweepCsv) {
  const Outcome o = skypath({"sweep", "--maps-dir", path("maps"), "--targets", "-45", "--kappas", "3", "--no-timing"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::istringstream lines(o.out);
  std::string header;
  std::string row;
  std::string extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "target_db,kappa,feasible,length_m,runtime_ms,vertices,edges");
  EXPECT_EQ(row.rfind("-45,3,", 0), 0U);
  EXPECT_FALSE(std::getline(lines, extra));

  const Outcome timed = skypath({"sweep", "--maps-dir", path("maps"), "--range", "-46:-45:0.5", "--kappas", "1,5",
                                 "--out-csv", path("sweep.csv")});
  ASSERT_EQ(timed.code, kExitOk) << timed.err;
  const std::string csv = io::read_text(path("sweep.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  EXPECT_EQ(skypath({"sweep", "--maps-dir", path("maps"), "--kappas", "1"}).code, kExitUsage);
}

TEST_F(CliTest, RenderOutputs) {
  ASSERT_EQ(skypath({"render", "--map", path("maps/superposed.rmap"), "--out", path("best.pgm")}).code, kExitOk);
  EXPECT_EQ(io::read_text(path("best.pgm")).rfind("P5\n126 126\n255\n", 0), 0U);

  ASSERT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-42.5", "--mask-out", path("mask.fmsk")}).code,
            kExitOk);
  ASSERT_EQ(skypath({"render", "--mask", path("mask.fmsk"), "--out", path("mask.pbm")}).code, kExitOk);
  const io::MaskFile mask = io::decode_mask(io::read_bytes(path("mask.fmsk")));
  EXPECT_EQ(io::mask_from_pbm(io::read_text(path("mask.pbm"))), mask.mask);
  const Coverage cov(io::read_radio_map_dir(path("maps")));
  EXPECT_EQ(mask.mask, build_feasible_map(cov, -42.5).mask);

  ASSERT_EQ(skypath({"render", "--maps-dir", path("maps"), "--target-db", "-42.5", "--out", path("mask2.pbm")}).code,
            kExitOk);
  EXPECT_EQ(io::read_text(path("mask2.pbm")), io::read_text(path("mask.pbm")));

  ASSERT_EQ(skypath({"plan", "--maps-dir", path("maps"), "--target-db", "-45", "--out", path("p45.json")}).code,
            kExitOk);
  ASSERT_EQ(skypath({"render", "--map", path("maps/superposed.rmap"), "--path", path("p45.json"), "--out",
                     path("overlay.svg")}).code,
            kExitOk);
  const std::string svg = io::read_text(path("overlay.svg"));
  EXPECT_NE(svg.find("points=\"2.5,627.5"), std::string::npos);
  EXPECT_EQ(skypath({"render", "--out", path("nothing.pgm")}).code, kExitUsage);
}

}  // namespace
}  // namespace skypath::cli
