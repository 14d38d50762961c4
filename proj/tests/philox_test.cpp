#include <gtest/gtest.h>

#include <cmath>

#include "skypath/philox.hpp"

namespace skypath {
namespace {

// Known-answer vectors published with Random123 (philox4x32_10).
TEST(PhiloxTest, KnownAnswerVectors) {
  using P = Philox4x32;
  EXPECT_EQ(P(P::Key{0, 0})({0, 0, 0, 0}), (P::Counter{0x6627e8d5U, 0xe169c58dU, 0xbc57ac4cU, 0x9b00dbd8U}));
  EXPECT_EQ(P(P::Key{0xffffffffU, 0xffffffffU})({0xffffffffU, 0xffffffffU, 0xffffffffU, 0xffffffffU}),
            (P::Counter{0x408f276dU, 0x41c83b0eU, 0xa20bc7c6U, 0x6d5451fdU}));
  EXPECT_EQ(P(P::Key{0xa4093822U, 0x299f31d0U})({0x243f6a88U, 0x85a308d3U, 0x13198a2eU, 0x03707344U}),
            (P::Counter{0xd16cfe09U, 0x94fdccebU, 0x5001e420U, 0x24126ea1U}));
}

TEST(PhiloxTest, UnitTransformsStayInRange) {
  EXPECT_GT(Philox4x32::to_open_unit(0), 0.0);
  EXPECT_LT(Philox4x32::to_open_unit(0xffffffffU), 1.0);
  EXPECT_EQ(Philox4x32::to_unit53(0, 0), 0.0);
  EXPECT_LT(Philox4x32::to_unit53(0xffffffffU, 0xffffffffU), 1.0);
}

TEST(PhiloxTest, NormalDeviatesHaveUnitMoments) {
  const Philox4x32 gen(12345, 7);
  double sum = 0.0;
  double sq = 0.0;
  constexpr int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double z = gen.normal({static_cast<std::uint32_t>(k), 3, 0, 0});
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);
}

TEST(PhiloxTest, StreamsAreDistinct) {
  const Philox4x32 a(99, 1);
  const Philox4x32 b(99, 2);
  const Philox4x32 c(100, 1);
  EXPECT_NE(a({1, 2, 0, 0}), b({1, 2, 0, 0}));
  EXPECT_NE(a({1, 2, 0, 0}), c({1, 2, 0, 0}));
  EXPECT_EQ(a({1, 2, 0, 0}), Philox4x32(99, 1)({1, 2, 0, 0}));
}

}  // namespace
}  // namespace skypath
