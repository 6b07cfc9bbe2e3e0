#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "dunkl/errors.hpp"
#include "dunkl/partitions.hpp"

namespace dunkl {
namespace {

// All weakly decreasing tuples of length ≤ k summing to m, by brute force
// over every composition.
std::set<std::vector<int>> brute_force(int m, int k) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      std::vector<int> sorted = cur;
      std::sort(sorted.rbegin(), sorted.rend());
      out.insert(sorted);
      return;
    }
    if (static_cast<int>(cur.size()) == k) return;
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

TEST(Partition, TrimsTrailingZeros) {
  const Partition p{2, 1, 0, 0};
  EXPECT_EQ(p, (Partition{2, 1}));
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(p.padded(4), (std::vector<int>{2, 1, 0, 0}));
}

TEST(Partition, RejectsBadShapes) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, -1}), DomainError);
  EXPECT_THROW((Partition{3, 2, 1}).padded(2), DomainError);
}

TEST(Partition, ConjugateIsInvolution) {
  EXPECT_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
  for (int m = 0; m <= 10; ++m)
    for (const auto& p : enumerate_partitions(m, m + 1)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partition, ToStringAndParse) {
  EXPECT_EQ((Partition{3, 1}).to_string(), "(3,1)");
  EXPECT_EQ(Partition{}.to_string(), "()");
  EXPECT_EQ(parse_partition("3,1"), (Partition{3, 1}));
  EXPECT_EQ(parse_partition(" 4 , 2,2 "), (Partition{4, 2, 2}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_THROW(parse_partition("1,2"), DomainError);
  EXPECT_THROW(parse_partition("2,,1"), DomainError);
  EXPECT_THROW(parse_partition("2,x"), DomainError);
  EXPECT_THROW(parse_partition("2.5"), DomainError);
}

TEST(EnumeratePartitions, ReverseLexicographicOrder) {
  const auto parts = enumerate_partitions(4, 4);
  const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(parts, expected);
  EXPECT_EQ(enumerate_partitions(0, 3), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(5, 1), std::vector<Partition>{Partition{5}});
}

TEST(EnumeratePartitions, MatchesBruteForce) {
  for (int m = 0; m <= 12; ++m) {
    for (int k = 1; k <= 5; ++k) {
      std::set<std::vector<int>> got;
      for (const auto& p : enumerate_partitions(m, k)) {
        EXPECT_EQ(p.weight(), m);
        EXPECT_LE(p.length(), k);
        got.insert(p.parts());
      }
      EXPECT_EQ(got, brute_force(m, k)) << "m=" << m << " k=" << k;
    }
  }
}

TEST(CountPartitions, AgreesWithEnumeration) {
  EXPECT_EQ(count_partitions(8, 4), 15u);
  EXPECT_EQ(count_partitions(0, 1), 1u);
  EXPECT_EQ(count_partitions(100, 100), 190569292u);
  for (int m = 0; m <= 25; ++m)
    for (int k = 1; k <= 6; ++k)
      EXPECT_EQ(count_partitions(m, k), enumerate_partitions(m, k).size());
}

TEST(EnumeratePartitions, RejectsBadArguments) {
  EXPECT_THROW(enumerate_partitions(3, 0), DomainError);
  EXPECT_THROW(enumerate_partitions(-1, 2), DomainError);
  EXPECT_THROW(count_partitions(3, 0), DomainError);
}

}  // namespace
}  // namespace dunkl
