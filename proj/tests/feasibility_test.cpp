#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skypath/error.hpp"
#include "skypath/feasibility.hpp"

namespace skypath {
namespace {

using testing::random_mask;
using testing::random_maps;

TEST(FeasibleMapTest, ToyMapHasOneFeasibleCell) {
  std::vector<float> g(9, -60.0F);
  g[0] = -40.0F;
  const RadioMapSet maps({RadioMap(1, Region(3.0, 1.0, 10.0), -100.0, g)});
  const FeasibleMap f = build_feasible_map(maps, -50.0);
  EXPECT_EQ(f.mask.count(), 1U);
  EXPECT_TRUE(f.feasible({1, 1}));
}

TEST(FeasibleMapTest, VacuousAndImpossibleTargets) {
  std::vector<float> g(16, -45.0F);
  g[5] = kNegligible;
  const RadioMapSet maps({RadioMap(1, Region(4.0, 1.0, 10.0), -57.0, g)});
  const FeasibleMap low = build_feasible_map(maps, -1e9);
  EXPECT_EQ(low.mask.count(), 15U);
  EXPECT_FALSE(low.feasible({2, 2}));
  EXPECT_EQ(build_feasible_map(maps, -44.0).mask.count(), 0U);
  EXPECT_EQ(build_feasible_map(maps, -std::numeric_limits<double>::infinity()).mask.count(), 15U);
}

TEST(FeasibleMapTest, MatchesMaxOverGbs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const RadioMapSet maps = random_maps(rng, 13, 3);
    const double target = -45.0 + trial * 0.25;
    const FeasibleMap f = build_feasible_map(maps, target);
    const Coverage cov(maps);
    EXPECT_EQ(build_feasible_map(cov, target).mask, f.mask);
    for (int i = 1; i <= 13; ++i) {
      for (int j = 1; j <= 13; ++j) {
        float best = kNegligible;
        for (const RadioMap& m : maps.maps()) best = std::max(best, m.at(i, j));
        ASSERT_EQ(f.feasible({i, j}), best >= target);
      }
    }
  }
}

TEST(CoverageTest, ServingGbsIsArgmaxWithLowestIdOnTies) {
  const Region r(2.0, 1.0, 10.0);
  const RadioMapSet maps({RadioMap(1, r, -100.0, {-50.0F, -40.0F, -45.0F, kNegligible}),
                          RadioMap(2, r, -100.0, {-45.0F, -40.0F, -50.0F, kNegligible})});
  const Coverage cov(maps);
  EXPECT_EQ(cov.serving_gbs({1, 1}), 2);
  EXPECT_EQ(cov.serving_gbs({1, 2}), 1);
  EXPECT_EQ(cov.serving_gbs({2, 1}), 1);
  EXPECT_EQ(cov.gain({1, 1}), -45.0F);
  EXPECT_TRUE(is_negligible(cov.gain({2, 2})));
}

TEST(NeighborSetTest, Examples) {
  EXPECT_EQ(neighbor_set(4, 7, 1, 10), (std::vector<CellIndex>{{4, 7}}));
  const auto n11 = neighbor_set(1, 1, 3, 6);
  ASSERT_EQ(n11.size(), 9U);
  for (const CellIndex& c : n11) EXPECT_TRUE(c.i >= 1 && c.i <= 3 && c.j >= 1 && c.j <= 3);
  const auto n21 = neighbor_set(2, 1, 3, 6);
  ASSERT_EQ(n21.size(), 9U);
  for (const CellIndex& c : n21) EXPECT_TRUE(c.i >= 4 && c.i <= 6 && c.j >= 1 && c.j <= 3);
  EXPECT_THROW(neighbor_set(3, 1, 3, 6), IndexError);
  EXPECT_THROW(neighbor_set(0, 1, 3, 6), IndexError);
}

TEST(NeighborSetTest, MatchesDistanceDefinition) {
  // Brute force: original points within half a quantized spacing of the center.
  const Region region(45.0, 5.0, 90.0);
  for (int kappa : {1, 3, 9}) {
    const int side = 9 / kappa;
    for (int i = 1; i <= side; ++i) {
      for (int j = 1; j <= side; ++j) {
        const Point2 c = quantized_grid_point(i, j, kappa, region);
        std::vector<CellIndex> expected;
        for (int p = 1; p <= 9; ++p) {
          for (int q = 1; q <= 9; ++q) {
            const Point2 u = grid_point(p, q, region);
            const double half = kappa * 5.0 / 2.0;
            if (std::abs(u.x - c.x) < half && std::abs(u.y - c.y) < half) expected.push_back({p, q});
          }
        }
        auto got = neighbor_set(i, j, kappa, 9);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
      }
    }
  }
}

TEST(QuantizedGridPointTest, Examples) {
  const Region region(30.0, 5.0, 90.0);
  EXPECT_EQ(quantized_grid_point(1, 1, 3, region), (Point2{7.5, 7.5}));
  EXPECT_EQ(quantized_grid_point(1, 1, 3, region), grid_point(2, 2, region));
  const Region r25(50.0, 5.0, 90.0);
  EXPECT_EQ(quantized_grid_point(2, 3, 5, Region(75.0, 5.0, 90.0)), (Point2{37.5, 62.5}));
  EXPECT_EQ(quantized_grid_point(4, 5, 1, r25), grid_point(4, 5, r25));
  EXPECT_THROW(quantized_grid_point(3, 1, 3, region), IndexError);
  EXPECT_THROW(quantized_grid_point(1, 1, 4, r25), ConfigError);
}

TEST(QuantizedGridPointTest, CoincidesWithBlockCenter) {
  const Region region(105.0, 5.0, 90.0);
  for (int kappa : {1, 3, 7, 21}) {
    const int side = 21 / kappa;
    for (int i = 1; i <= side; ++i) {
      for (int j = 1; j <= side; ++j) {
        const CellIndex c = quantized_center({i, j}, kappa);
        EXPECT_EQ(c, (CellIndex{(i - 1) * kappa + (kappa + 1) / 2, (j - 1) * kappa + (kappa + 1) / 2}));
        EXPECT_EQ(quantized_grid_point(i, j, kappa, region), grid_point(c, region));
      }
    }
  }
}

TEST(QuantizedFeasibleMapTest, HoleKnocksOutItsBlock) {
  Bitmap mask(6, 6, true);
  mask.set(3, 1, false);  // fine cell (4,2)
  const QuantizedFeasibleMap q = build_quantized_feasible_map(testing::feasible_from_mask(mask), 3);
  ASSERT_EQ(q.cells_per_side, 2);
  EXPECT_FALSE(q.feasible({2, 1}));
  EXPECT_EQ(q.mask.count(), 3U);
  EXPECT_DOUBLE_EQ(q.spacing(), 3.0);
}

TEST(QuantizedFeasibleMapTest, TrivialCases) {
  std::mt19937_64 rng(3);
  const Bitmap mask = random_mask(rng, 70, 0.7);
  const FeasibleMap f = testing::feasible_from_mask(mask);
  EXPECT_EQ(build_quantized_feasible_map(f, 1).mask, mask);
  const FeasibleMap ones = testing::feasible_from_mask(Bitmap(70, 70, true));
  for (int kappa : {5, 7, 35}) EXPECT_EQ(build_quantized_feasible_map(ones, kappa).mask.count(), 70U * 70U / (kappa * kappa));
}

TEST(QuantizedFeasibleMapTest, RejectsBadKappa) {
  const FeasibleMap f = testing::feasible_from_mask(Bitmap(10, 10, true));
  EXPECT_THROW(build_quantized_feasible_map(f, 2), ConfigError);
  EXPECT_THROW(build_quantized_feasible_map(f, 3), ConfigError);
  EXPECT_THROW(build_quantized_feasible_map(f, 0), ConfigError);
  EXPECT_THROW(build_quantized_feasible_map(f, -1), ConfigError);
  EXPECT_THROW(build_quantized_feasible_map(f, 11), ConfigError);
  EXPECT_THROW(build_quantized_feasible_map(f, 4, RemainderPolicy::kCrop), ConfigError);
}

TEST(QuantizedFeasibleMapTest, CropCoversFullBlocksOnly) {
  Bitmap mask(11, 11, true);
  mask.set(10, 10, false);  // lives in the cropped strip
  mask.set(0, 0, false);
  const QuantizedFeasibleMap q =
      build_quantized_feasible_map(testing::feasible_from_mask(mask), 5, RemainderPolicy::kCrop);
  EXPECT_EQ(q.cells_per_side, 2);
  EXPECT_EQ(q.covered_fine_cells(), 10);
  EXPECT_FALSE(q.feasible({1, 1}));
  EXPECT_EQ(q.mask.count(), 3U);
  EXPECT_EQ(quantized_grid_point(2, 2, 5, Region(11.0, 1.0, 10.0), RemainderPolicy::kCrop), (Point2{7.5, 7.5}));
}

TEST(QuantizedFeasibleMapTest, AndFormEqualsMaxOverGbsForm) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int kappa = std::array{1, 3, 5, 9}[static_cast<std::size_t>(trial % 4)];
    const int n = kappa * (2 + trial % 5);
    const RadioMapSet maps = random_maps(rng, n, 1 + trial % 4, 5.0, -48.0F, -38.0F);
    const double target = -45.0;
    const QuantizedFeasibleMap q = build_quantized_feasible_map(build_feasible_map(maps, target), kappa);
    for (int i = 1; i <= n / kappa; ++i) {
      for (int j = 1; j <= n / kappa; ++j) {
        bool all = true;
        for (int p = (i - 1) * kappa + 1; p <= i * kappa; ++p) {
          for (int r = (j - 1) * kappa + 1; r <= j * kappa; ++r) {
            float best = kNegligible;
            for (const RadioMap& m : maps.maps()) best = std::max(best, m.at(p, r));
            all = all && best >= target;
          }
        }
        ASSERT_EQ(q.feasible({i, j}), all) << "trial " << trial;
      }
    }
  }
}

TEST(QuantizedFeasibleMapTest, MonotoneInTargetAndUnfoldsInsideFine) {
  std::mt19937_64 rng(5);
  const RadioMapSet maps = testing::blob_maps(rng, 45, 3);
  for (int kappa : {1, 3, 5, 9, 15}) {
    for (double target = -56.0; target < -38.0; target += 0.5) {
      const FeasibleMap lo = build_feasible_map(maps, target);
      const FeasibleMap hi = build_feasible_map(maps, target + 0.5);
      const QuantizedFeasibleMap qlo = build_quantized_feasible_map(lo, kappa);
      const QuantizedFeasibleMap qhi = build_quantized_feasible_map(hi, kappa);
      std::size_t unfolded = 0;
      for (int i = 1; i <= qlo.cells_per_side; ++i) {
        for (int j = 1; j <= qlo.cells_per_side; ++j) {
          if (qhi.feasible({i, j})) ASSERT_TRUE(qlo.feasible({i, j}));
          if (!qlo.feasible({i, j})) continue;
          for (const CellIndex& c : neighbor_set(i, j, kappa, 45)) ASSERT_TRUE(lo.feasible(c));
          unfolded += static_cast<std::size_t>(kappa * kappa);
        }
      }
      for (int i = 1; i <= 45; ++i) {
        for (int j = 1; j <= 45; ++j) {
          if (hi.feasible({i, j})) ASSERT_TRUE(lo.feasible({i, j}));
        }
      }
      EXPECT_LE(unfolded, lo.mask.count());
    }
  }
}

}  // namespace
}  // namespace skypath
