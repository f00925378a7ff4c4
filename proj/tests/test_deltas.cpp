#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "heckelab/deltas.hpp"
#include "heckelab/errors.hpp"

using namespace heckelab;

namespace {

long binom(int n, int k) {
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST(Deltas, SmallEnumerations) {
  const auto d21 = enumerate_deltas(2, 1);
  ASSERT_EQ(d21.size(), 2u);
  EXPECT_EQ(d21[0].bits(), (std::vector<int>{1, 0}));
  EXPECT_EQ(d21[1].bits(), (std::vector<int>{0, 1}));
  const auto d30 = enumerate_deltas(3, 0);
  ASSERT_EQ(d30.size(), 1u);
  EXPECT_EQ(d30[0].bits(), (std::vector<int>{0, 0, 0}));
  EXPECT_THROW(enumerate_deltas(2, 3), DomainError);
  EXPECT_THROW(DeltaVec({0, 2}), DomainError);
}

TEST(Deltas, SixChooseTwo) {
  const auto ds = enumerate_deltas(6, 2);
  EXPECT_EQ(ds.size(), 15u);
  auto has = [&](std::vector<int> b) {
    return std::any_of(ds.begin(), ds.end(), [&](const DeltaVec& d) { return d.bits() == b; });
  };
  EXPECT_TRUE(has({0, 1, 1, 0, 0, 0}));
  EXPECT_TRUE(has({1, 0, 0, 0, 1, 0}));
}

TEST(Deltas, CountOrderAndDistinctness) {
  for (int n = 0; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto ds = enumerate_deltas(n, r);
      EXPECT_EQ(static_cast<long>(ds.size()), binom(n, r));
      EXPECT_TRUE(std::is_sorted(ds.begin(), ds.end(), [](const auto& a, const auto& b) { return a > b; }));
      std::set<std::vector<int>> seen;
      for (const auto& d : ds) {
        EXPECT_EQ(d.r(), r);
        EXPECT_EQ(d.n(), n);
        seen.insert(d.bits());
      }
      EXPECT_EQ(seen.size(), ds.size());
    }
}

TEST(Deltas, Weight) {
  EXPECT_EQ(weight(DeltaVec({0, 1, 1, 0, 0, 0})), 2);
  EXPECT_EQ(weight(DeltaVec({1, 0, 0, 0, 1, 0})), 3);
  EXPECT_EQ(weight(DeltaVec({1, 1, 0, 0})), 0);
}

TEST(Deltas, Omega) {
  EXPECT_EQ(omega(DeltaVec({0, 0, 1, 1})), 7);
  EXPECT_EQ(omega(DeltaVec({1, 0, 0, 0})), 1);
  EXPECT_EQ(omega(DeltaVec({0, 1, 1, 0, 0, 0})), 5);
}

TEST(Deltas, WeightIsInversionCount) {
  // |delta| counts pairs (zero at i, one at j > i).
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r)
      for (const auto& d : enumerate_deltas(n, r)) {
        long inv = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) inv += (d[i] == 0 && d[j] == 1);
        EXPECT_EQ(weight(d), inv);
        EXPECT_EQ(weight_with_total(d, r), weight(d));
      }
}

TEST(Deltas, ConcatAddsCrossTerm) {
  const DeltaVec a({1, 0, 1}), b({0, 1});
  const DeltaVec c = a.concat(b);
  EXPECT_EQ(c.bits(), (std::vector<int>{1, 0, 1, 0, 1}));
  // zeros of a see every one of b
  EXPECT_EQ(weight(c), weight(a) + weight(b) + (a.n() - a.r()) * b.r());
}

TEST(Deltas, SchubertCountIsGaussian) {
  EXPECT_EQ(schubert_count(2, 1), (QPoly{1, 1}));
  EXPECT_EQ(schubert_count(5, 0), QPoly(1));
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r)
      EXPECT_EQ(schubert_count(n, r), gaussian_binomial(static_cast<unsigned>(r), static_cast<unsigned>(n)));
}

TEST(Deltas, WeightGeneratingFunctionIsGaussian) {
  for (int n = 1; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) {
      QPoly g;
      for (const auto& d : enumerate_deltas(n, r)) g += QPoly::monomial(1, static_cast<std::size_t>(weight(d)));
      EXPECT_EQ(g, gaussian_binomial(static_cast<unsigned>(r), static_cast<unsigned>(n)));
    }
}
