#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qpart/partition.hpp"
#include "../support/seed.hpp"

using namespace qpart;

namespace {

std::vector<Partition> P(std::initializer_list<Partition> ps) { return ps; }

// p(n) by Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long long> partition_numbers(int n_max) {
  std::vector<long long> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = k % 2 ? 1 : -1;
      s += sign * p[n - g1];
      if (g2 <= n) s += sign * p[n - g2];
    }
    p[n] = s;
  }
  return p;
}

// Every subset of {1..n} as a brute-force source of distinct-part partitions.
std::vector<Partition> distinct_by_subsets(int n) {
  std::vector<Partition> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parts;
    int total = 0;
    for (int i = n; i >= 1; --i)
      if (mask >> (i - 1) & 1u) {
        parts.push_back(i);
        total += i;
      }
    if (total == n) out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace

TEST(PartitionType, RejectsBadParts) {
  EXPECT_THROW(Partition({3, 4}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  Partition p{5, 2, 2};
  EXPECT_EQ(p.size(), 9);
  EXPECT_EQ(p.length(), 3);
}

TEST(PartitionType, ParseLiterals) {
  EXPECT_EQ(Partition::parse("(11,3,1)"), Partition({11, 3, 1}));
  EXPECT_EQ(Partition::parse("()"), Partition());
  EXPECT_EQ(Partition::parse(" ( 4 , 4 ) "), Partition({4, 4}));
  EXPECT_THROW(Partition::parse("(1,3)"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("1,3"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("(3,0)"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("(3,)"), std::invalid_argument);
  EXPECT_EQ(Partition({12, 7, 5, 1}).to_string(), "(12,7,5,1)");
}

TEST(Enumerate, GapTwoFifteenIntoThree) {
  ConstraintSet c = ConstraintSet::rr();
  c.exact_parts = 3;
  EXPECT_EQ(enumerate(15, c),
            P({{11, 3, 1}, {10, 4, 1}, {9, 5, 1}, {9, 4, 2}, {8, 6, 1}, {8, 5, 2}, {7, 5, 3}}));
}

TEST(Enumerate, DistinctEvenFifteenIntoThree) {
  ConstraintSet c = ConstraintSet::distinct();
  c.exact_parts = 3;
  c.smallest_even_exceeds_twice_odd = true;
  EXPECT_EQ(enumerate(15, c),
            P({{11, 3, 1}, {10, 4, 1}, {9, 5, 1}, {8, 6, 1}, {8, 4, 3}, {7, 5, 3}, {6, 5, 4}}));
}

TEST(Enumerate, EmptyPartitionOfZero) {
  EXPECT_EQ(enumerate(0, ConstraintSet::unrestricted()), P({Partition()}));
  EXPECT_EQ(enumerate(0, ConstraintSet::rr()), P({Partition()}));
}

TEST(Enumerate, CountsMatchPentagonalRecurrence) {
  const auto p = partition_numbers(30);
  for (int n = 0; n <= 30; ++n)
    EXPECT_EQ(static_cast<long long>(enumerate(n, {}).size()), p[n]) << "n=" << n;
}

TEST(Enumerate, DistinctMatchesSubsets) {
  for (int n = 0; n <= 16; ++n) {
    auto got = enumerate(n, ConstraintSet::distinct());
    auto want = distinct_by_subsets(n);
    std::sort(want.begin(), want.end(), std::greater<>());
    EXPECT_EQ(got, want) << "n=" << n;
  }
}

TEST(Enumerate, DescendingLexAndAdmitted) {
  ConstraintSet c;
  c.min_part = 2;
  c.max_part = 7;
  c.parity = Parity::odd;
  c.max_parts = 4;
  for (int n = 0; n <= 24; ++n) {
    auto ps = enumerate(n, c);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_TRUE(c.admits(ps[i]));
      EXPECT_EQ(ps[i].size(), n);
      for (int v : ps[i].parts()) EXPECT_TRUE(v % 2 == 1 && v >= 3 && v <= 7);
      if (i) EXPECT_GT(ps[i - 1], ps[i]);
    }
    // Every admitted partition is found.
    std::size_t admitted = 0;
    for (const auto& q : enumerate(n, {}))
      if (c.admits(q)) ++admitted;
    EXPECT_EQ(admitted, ps.size());
  }
}

TEST(Stats, SpecExamples) {
  EXPECT_EQ(durfee(Partition{4, 3, 3, 2}), 3);
  auto s = stats(Partition{7, 5, 3, 1});
  EXPECT_EQ(s.nu, 4);
  EXPECT_EQ(s.nu_odd, 4);
  EXPECT_TRUE(s.smallest_even.is_infinity());
  EXPECT_EQ(s.run, 1);
  auto e = stats(Partition());
  EXPECT_EQ(e.nu, 0);
  EXPECT_EQ(e.largest, 0);
  EXPECT_EQ(e.durfee, 0);
  EXPECT_EQ(e.run, 0);
  EXPECT_TRUE(e.smallest_even.is_infinity());
}

TEST(Stats, RunAndSmallestEven) {
  EXPECT_EQ(run_length(Partition{5, 3, 2, 1}), 3);
  EXPECT_EQ(run_length(Partition{4, 3, 2}), 0);
  EXPECT_EQ(run_length(Partition{2, 2, 1, 1}), 2);
  EXPECT_EQ(smallest_even(Partition{10, 8, 5}).value(), 8);
  EXPECT_TRUE(SmallestEven::infinity().exceeds(1000000));
  EXPECT_FALSE(SmallestEven::of(6).exceeds(6));
}

TEST(Stats, DurfeeDefinition) {
  for (int n = 0; n <= 14; ++n)
    for (const auto& p : enumerate(n, {})) {
      int d = 0;
      for (int i = 1; i <= p.length(); ++i)
        if (p[i - 1] >= i) d = i;
      EXPECT_EQ(durfee(p), d) << p;
    }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{5, 2, 2}), Partition({3, 3, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition()), Partition());
}

TEST(Conjugate, InvolutionSwappingLargestAndLength) {
  for (int n = 0; n <= 20; ++n)
    for (const auto& p : enumerate(n, {})) {
      auto c = conjugate(p);
      EXPECT_EQ(conjugate(c), p);
      EXPECT_EQ(c.size(), p.size());
      EXPECT_EQ(c.length(), p.largest());
      EXPECT_EQ(c.largest(), p.length());
    }
}

TEST(WeightedGf, GapTwoSmallOrder) {
  auto x = Polynomial::monomial(x_pow(1)), x2 = Polynomial::monomial(x_pow(2));
  auto q = [](unsigned e) { return Polynomial::monomial(q_pow(e)); };
  auto want = 1 + x * q(1) + x * q(2) + x * q(3) + (x + x2) * q(4) + (x + x2) * q(5);
  auto w = WeightSpec::counting_parts(x_pow(1));
  EXPECT_EQ(weighted_gf(ConstraintSet::rr(), w, 5), TruncatedSeries::from_polynomial(want, 5));
  ConstraintSet d = ConstraintSet::distinct();
  d.smallest_even_exceeds_twice_odd = true;
  EXPECT_EQ(weighted_gf(d, w, 5), TruncatedSeries::from_polynomial(want, 5));
}

TEST(WeightedGf, UnconstrainedCounts) {
  auto q = [](unsigned e) { return Polynomial::monomial(q_pow(e)); };
  EXPECT_EQ(weighted_gf({}, {}, 4),
            TruncatedSeries::from_polynomial(1 + q(1) + 2 * q(2) + 3 * q(3) + 5 * q(4), 4));
}

TEST(WeightedGf, GapTwoMatchesDistinctEven) {
  ConstraintSet d = ConstraintSet::distinct();
  d.smallest_even_exceeds_twice_odd = true;
  auto w = WeightSpec::counting_parts(x_pow(1));
  EXPECT_EQ(weighted_gf(ConstraintSet::rr(), w, 25), weighted_gf(d, w, 25));
}

TEST(WeightedGf, DurfeeDissection) {
  const unsigned T = 20;
  auto lhs = TruncatedSeries(T);
  for (unsigned i = 0; i * i <= T; ++i) {
    auto inv = pochhammer_finite_inverse(q_pow(1), i, T);
    lhs += (inv * inv).times(1, x_pow(i) * q_pow(i * i));
  }
  WeightSpec w;
  w.per_durfee = x_pow(1);
  EXPECT_EQ(lhs, weighted_gf({}, w, T));
}

TEST(PairGf, CounterexamplePairs) {
  const Partition a{3, 2}, b{2, 1};
  EXPECT_TRUE(relation_holds(PairRelation::largest_le_nu, a, b));
  EXPECT_FALSE(relation_holds(PairRelation::durfee_le_run, a, b));
  EXPECT_FALSE(relation_holds(PairRelation::largest_le_nu, b, a));
  EXPECT_TRUE(relation_holds(PairRelation::durfee_le_run, b, a));
}

TEST(PairGf, EmptyPairAtZero) {
  for (auto r : {PairRelation::largest_le_nu, PairRelation::durfee_le_run, PairRelation::none})
    EXPECT_EQ(weighted_pair_gf(ConstraintSet::distinct(), {}, r, {}, {}, 0),
              TruncatedSeries::one(0));
}

TEST(PairGf, NoneRelationFactorizes) {
  const unsigned T = 12;
  WeightSpec w1 = WeightSpec::counting_parts(Monomial::of(Var::b)), w2 = WeightSpec::counting_parts(Monomial::of(Var::a));
  auto pair = weighted_pair_gf(ConstraintSet::distinct(), {}, PairRelation::none, w1, w2, T);
  EXPECT_EQ(pair, weighted_gf(ConstraintSet::distinct(), w1, T) * weighted_gf({}, w2, T));
}
