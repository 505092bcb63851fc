#include <gtest/gtest.h>

#include "codemark/bits.hpp"
#include "codemark/errors.hpp"

using namespace codemark;

TEST(WatermarkBits, ParsesAndPrints) {
  auto w = WatermarkBits::parse("1001");
  EXPECT_EQ(w.size(), 4u);
  EXPECT_TRUE(w[0]);
  EXPECT_FALSE(w[1]);
  EXPECT_EQ(w.str(), "1001");
  EXPECT_EQ(w.tuple(), "(1, 0, 0, 1)");
}

TEST(WatermarkBits, RejectsEmptyAndBadCharacters) {
  EXPECT_THROW(WatermarkBits::parse(""), InvalidArgument);
  EXPECT_THROW(WatermarkBits::parse("10a1"), InvalidArgument);
  EXPECT_THROW(WatermarkBits::zeros(0), InvalidArgument);
  EXPECT_THROW(WatermarkBits(std::vector<std::uint8_t>{}), InvalidArgument);
}

TEST(WatermarkBits, NormalizesNonZeroValues) {
  WatermarkBits w(std::vector<std::uint8_t>{0, 7, 1});
  EXPECT_EQ(w.str(), "011");
  EXPECT_EQ(w, WatermarkBits::parse("011"));
}
