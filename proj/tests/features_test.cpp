#include <gtest/gtest.h>

#include <random>

#include "stepfeat/features.hpp"
#include "test_util.hpp"

namespace stepfeat {
namespace {

using testing::code_of;

TEST(AverageVector, SingleVector) {
  const Code ones = encode(WindowVector(std::vector<Level>(5, 1))).value();
  const auto avg = average_vector(VectorDistribution::from_frequencies({{ones, 1.0}}, 5));
  EXPECT_EQ(avg.components, std::vector<double>(5, 1.0));
}

TEST(AverageVector, OnlyPositiveCodesContribute) {
  const Code twos = code_bound(4);  // the all-twos code
  ASSERT_EQ(decode(twos, 4), WindowVector(std::vector<Level>(4, 2)));
  const auto avg = average_vector(VectorDistribution::from_frequencies({{twos, 0.5}, {-twos, 0.5}}, 4));
  EXPECT_EQ(avg.components, std::vector<double>(4, 1.0));
}

TEST(AverageVector, HandEvaluatedMixture) {
  // 6 = <1,1>, 7 = <2,1>, -6 = <-1,-1>.
  const auto d = VectorDistribution::from_frequencies({{6, 0.3}, {7, 0.1}, {-6, 0.6}}, 2);
  const auto avg = average_vector(d);
  ASSERT_EQ(avg.components.size(), 2u);
  EXPECT_NEAR(avg.components[0], 0.3 * 1 + 0.1 * 2, 1e-15);
  EXPECT_NEAR(avg.components[1], 0.3 * 1 + 0.1 * 1, 1e-15);
  EXPECT_NEAR(positive_mass(d), 0.4, 1e-15);
}

TEST(AverageVector, ZeroCodeExcluded) {
  const auto d = VectorDistribution::from_frequencies({{0, 0.9}, {1, 0.1}}, 3);
  EXPECT_EQ(average_vector(d).components, (std::vector<double>{0.1, 0.0, 0.0}));
}

TEST(AverageVector, NoPositiveCodeRejected) {
  EXPECT_EQ(code_of([] { average_vector(VectorDistribution::from_frequencies({{0, 0.5}, {-3, 0.5}}, 2)); }),
            Errc::invalid_argument);
}

TEST(AverageVector, BoundedByPositiveMassAndScaleInvariant) {
  std::mt19937 gen(4);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t lw = 1 + gen() % 8;
    const Code bound = code_bound(lw);
    std::uniform_int_distribution<Code> code(-bound, bound);
    std::map<Code, std::uint64_t> counts;
    for (int i = 0; i < 40; ++i) counts[code(gen)] += 1 + gen() % 9;
    counts[1 + gen() % static_cast<std::uint64_t>(bound)] += 1;

    std::map<Code, std::uint64_t> scaled = counts;
    for (auto& [c, n] : scaled) n *= 7;

    const VectorDistribution d(counts, lw);
    const auto avg = average_vector(d);
    const auto avg_scaled = average_vector(VectorDistribution(scaled, lw));
    const double m = positive_mass(d);
    for (std::size_t k = 0; k < lw; ++k) {
      ASSERT_LE(std::abs(avg.components[k]), 2 * m + 1e-12);
      ASSERT_NEAR(avg.components[k], avg_scaled.components[k], 1e-12);
    }
  }
}

}  // namespace
}  // namespace stepfeat
