#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stepfeat/vector_codec.hpp"
#include "test_util.hpp"

namespace stepfeat {
namespace {

using testing::code_of;

WindowVector constant(Level v, std::size_t lw) { return WindowVector(std::vector<Level>(lw, v)); }

std::vector<Level> random_levels(std::mt19937& gen, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Level> out(n);
  for (auto& l : out) l = static_cast<Level>(d(gen));
  return out;
}

TEST(Encode, KnownCodes) {
  EXPECT_EQ(encode(constant(0, 7)).value(), 0);
  EXPECT_EQ(encode(constant(2, 7)).value(), 39062);
  EXPECT_EQ(encode(constant(1, 7)).value(), 19531);
  EXPECT_EQ(encode(WindowVector({1, 0, 0})).value(), 1);
  EXPECT_EQ(encode(WindowVector({-1, -1})).value(), -6);
  EXPECT_EQ(code_bound(7), 39062);
  EXPECT_EQ(code_bound(1), 2);
  EXPECT_EQ(code_bound(11), 24414062);
}

TEST(Encode, MatchesPowerSumOracle) {
  std::mt19937 gen(3);
  for (std::size_t lw : {1u, 5u, 11u, 20u}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto digits = random_levels(gen, lw);
      EXPECT_EQ(encode(digits), oracle::encode(std::vector<int>(digits.begin(), digits.end())));
    }
  }
}

TEST(Encode, RejectsBadDigitsAndLengths) {
  EXPECT_EQ(code_of([] { WindowVector({0, 3}); }), Errc::out_of_range);
  EXPECT_EQ(code_of([] { WindowVector({-3}); }), Errc::out_of_range);
  EXPECT_EQ(code_of([] { WindowVector({}); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([] { WindowVector(std::vector<Level>(kMaxWindow + 1, 0)); }), Errc::invalid_argument);
  const std::vector<Level> bad = {1, 5};
  EXPECT_EQ(code_of([&] { encode(std::span<const Level>(bad)); }), Errc::out_of_range);
}

TEST(Decode, KnownVectors) {
  EXPECT_EQ(decode(VectorCode(0, 7)), constant(0, 7));
  EXPECT_EQ(decode(VectorCode(39062, 7)), constant(2, 7));
  EXPECT_EQ(decode(VectorCode(-39062, 7)), constant(-2, 7));
  EXPECT_EQ(decode(-6, 2), WindowVector({-1, -1}));
}

TEST(Decode, OutOfIntervalRejected) {
  EXPECT_EQ(code_of([] { VectorCode(39063, 7); }), Errc::out_of_range);
  EXPECT_EQ(code_of([] { decode(-39063, 7); }), Errc::out_of_range);
  EXPECT_EQ(code_of([] { decode(3, 1); }), Errc::out_of_range);
}

TEST(Codec, ExhaustiveRoundTripSmallWindows) {
  for (std::size_t lw = 1; lw <= 4; ++lw) {
    const Code bound = code_bound(lw);
    std::size_t n = 0;
    for (Code c = -bound; c <= bound; ++c, ++n) {
      const WindowVector v = decode(c, lw);
      ASSERT_EQ(encode(v).value(), c);
      ASSERT_EQ(encode(-v).value(), -c);
    }
    std::size_t expected = 1;
    for (std::size_t k = 0; k < lw; ++k) expected *= 5;
    EXPECT_EQ(n, expected);
  }
}

TEST(Codec, RandomRoundTripLargeWindows) {
  std::mt19937 gen(17);
  for (std::size_t lw : {7u, 11u, 20u}) {
    for (int rep = 0; rep < 2000; ++rep) {
      const WindowVector v(random_levels(gen, lw));
      const VectorCode c = encode(v);
      ASSERT_LE(std::abs(c.value()), code_bound(lw));
      ASSERT_EQ(decode(c), v);
      ASSERT_EQ(encode(-v).value(), -c.value());
    }
  }
}

TEST(Windows, Examples) {
  const StepSignal s({1, 1, 0});
  const auto w = windows(s, 2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], WindowVector({1, 1}));
  EXPECT_EQ(w[1], WindowVector({1, 0}));

  const auto whole = windows(s, 3);
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0], WindowVector({1, 1, 0}));

  EXPECT_EQ(code_of([&] { windows(s, 4); }), Errc::invalid_argument);
  EXPECT_EQ(code_of([&] { window_codes(s, 4); }), Errc::invalid_argument);
}

TEST(Windows, CountLawAndRollingCodes) {
  std::mt19937 gen(8);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 20 + gen() % 300;
    const std::size_t lw = 1 + gen() % 12;
    const StepSignal s(random_levels(gen, n));
    const auto w = windows(s, lw);
    const auto codes = window_codes(s, lw);
    ASSERT_EQ(w.size(), n - lw + 1);
    ASSERT_EQ(codes.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) ASSERT_EQ(codes[i], encode(w[i]).value());
  }
}

TEST(Windows, ConstantRunYieldsRunMinusWindowPlusOne) {
  const std::size_t run = 25, lw = 7;
  std::vector<Level> levels = {0, -1};
  levels.insert(levels.end(), run, 2);
  levels.push_back(1);
  const auto w = windows(StepSignal(levels), lw);
  const auto twos = constant(2, lw);
  EXPECT_EQ(static_cast<std::size_t>(std::count(w.begin(), w.end(), twos)), run - lw + 1);
}

}  // namespace
}  // namespace stepfeat
