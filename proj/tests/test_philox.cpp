#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "rfvlc/mc/philox.hpp"

using rfvlc::mc::Philox4x32;

TEST(Philox, KnownAnswerVectors) {
  // Random123 kat_vectors, philox4x32 with 10 rounds
  EXPECT_EQ(Philox4x32::generate({0, 0, 0, 0}, {0, 0}),
            (Philox4x32::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(Philox4x32::generate({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (Philox4x32::Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(Philox4x32::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (Philox4x32::Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Philox, StreamsAreReproducibleAndDistinct) {
  Philox4x32 a(42, 3);
  Philox4x32 b(42, 3);
  Philox4x32 c(42, 4);
  Philox4x32 d(43, 3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    seen.insert(x);
    seen.insert(c());
    seen.insert(d());
  }
  EXPECT_EQ(seen.size(), 3000u);
}

TEST(Philox, UniformRanges) {
  Philox4x32 g(1, 0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = g.uniform();
    const double v = g.uniform_open();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000.0, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / 100000.0));
}
