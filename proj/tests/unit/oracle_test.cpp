#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "codemark/features.hpp"

using namespace codemark;

namespace {

/// Edit distance by the recursive definition, memoized on suffix offsets.
std::size_t lev_oracle(const std::string& a, const std::string& b, std::size_t i, std::size_t j,
                       std::vector<std::vector<long>>& memo) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  auto& slot = memo[i][j];
  if (slot >= 0) return static_cast<std::size_t>(slot);
  std::size_t best;
  if (a[i] == b[j]) {
    best = lev_oracle(a, b, i + 1, j + 1, memo);
  } else {
    best = 1 + std::min({lev_oracle(a, b, i + 1, j, memo), lev_oracle(a, b, i, j + 1, memo),
                         lev_oracle(a, b, i + 1, j + 1, memo)});
  }
  slot = static_cast<long>(best);
  return best;
}

std::size_t lev_oracle(const std::string& a, const std::string& b) {
  std::vector<std::vector<long>> memo(a.size() + 1, std::vector<long>(b.size() + 1, -1));
  return lev_oracle(a, b, 0, 0, memo);
}

std::string random_string(std::mt19937_64& rng) {
  std::string s(rng() % 33, ' ');
  for (auto& c : s) c = static_cast<char>('a' + rng() % 4);
  return s;
}

}  // namespace

TEST(Oracle, LevDistMatchesRecursiveDefinition) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_string(rng);
    auto b = random_string(rng);
    ASSERT_EQ(lev_dist(a, b), lev_oracle(a, b)) << a << " / " << b;
  }
}

TEST(Oracle, LevDistIsAMetric) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto a = random_string(rng), b = random_string(rng), c = random_string(rng);
    EXPECT_EQ(lev_dist(a, a), 0u);
    EXPECT_EQ(lev_dist(a, b), lev_dist(b, a));
    EXPECT_EQ(lev_dist(a, b) == 0, a == b);
    EXPECT_LE(lev_dist(a, c), lev_dist(a, b) + lev_dist(b, c));
  }
}

TEST(Oracle, JaccardMatchesSetEnumeration) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    std::set<std::string> a, b;
    for (int k = 0; k < 12; ++k) {
      if (rng() % 2) a.insert("v" + std::to_string(k));
      if (rng() % 2) b.insert("v" + std::to_string(k));
    }
    std::size_t both = 0, either = 0;
    for (int k = 0; k < 12; ++k) {
      auto name = "v" + std::to_string(k);
      bool in_a = a.count(name) > 0, in_b = b.count(name) > 0;
      both += in_a && in_b;
      either += in_a || in_b;
    }
    double expected = either == 0 ? 1.0 : static_cast<double>(both) / static_cast<double>(either);
    ASSERT_EQ(jaccard(a, b), expected);
  }
}

TEST(Oracle, CosineMatchesDirectComputation) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    StructVector a{}, b{};
    for (auto& x : a) x = static_cast<std::uint32_t>(rng() % 6);
    for (auto& x : b) x = static_cast<std::uint32_t>(rng() % 6);
    long double dot = 0, na = 0, nb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      dot += static_cast<long double>(a[k]) * b[k];
      na += static_cast<long double>(a[k]) * a[k];
      nb += static_cast<long double>(b[k]) * b[k];
    }
    double expected = (na == 0 && nb == 0) ? 1.0 : (na == 0 || nb == 0) ? 0.0 : static_cast<double>(dot / std::sqrt(na * nb));
    ASSERT_NEAR(cosine(a, b), expected, 1e-12);
  }
}
