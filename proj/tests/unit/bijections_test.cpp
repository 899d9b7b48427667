#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qpart/bijections.hpp"
#include "qpart/qbinomial.hpp"
#include "../support/seed.hpp"

using namespace qpart;

namespace {

std::vector<Partition> all_rr(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : enumerate(n, ConstraintSet::rr())) out.push_back(std::move(p));
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Minimal partitions with (n, k) found by brute force: gap-2 partitions with
// n odd and k even parts from which no 2-column can be removed. A minimal
// partition starts at 1 or 2 and climbs by at most 3, so parts stay below 3M.
std::vector<Partition> brute_minimal(int n, int k) {
  const int M = n + k;
  std::vector<Partition> out;
  ConstraintSet c = ConstraintSet::rr();
  c.exact_parts = M;
  c.max_part = std::max(0, 3 * M - 1);
  for (int size = 0; size <= M * (3 * M - 1); ++size)
    for (const auto& p : enumerate(size, c)) {
      if (odd_count(p) != n) continue;
      bool removable = false;
      for (int h = 1; h <= M && !removable; ++h) {
        std::vector<int> v(p.parts());
        for (int i = 0; i < h; ++i) v[i] -= 2;
        bool ok = v[M - 1] >= 1;
        for (int i = 1; i < M && ok; ++i) ok = v[i - 1] - v[i] >= 2;
        removable = ok;
      }
      if (!removable) out.push_back(p);
    }
  return out;
}

// Literal column insertion: add each column of conjugate(mu) to the h largest parts.
Partition literal_column_insert(const Partition& base, const Partition& mu) {
  std::vector<int> v(base.parts());
  const Partition cols = conjugate(mu);
  for (int h : cols.parts())
    for (int i = 0; i < h; ++i) v[i] += 1;
  return Partition(v);
}

}  // namespace

TEST(Staircase, Examples) {
  EXPECT_EQ(staircase(4, 2), Partition({7, 5, 3, 1}));
  EXPECT_EQ(staircase(0, 1), Partition());
  EXPECT_EQ(staircase(0, 2), Partition());
  EXPECT_EQ(staircase(3, 1), Partition({3, 2, 1}));
  EXPECT_EQ(staircase(3, 1).size(), 6);
  EXPECT_EQ(staircase(6, 2).size(), 36);
}

TEST(ColumnInsert, WorkedExample) {
  EXPECT_EQ(column_insert(Partition{7, 5, 3, 1}, Partition{5, 2, 2}), Partition({12, 7, 5, 1}));
  auto split = column_extract(Partition{12, 7, 5, 1}, 4, 2);
  EXPECT_EQ(split.base, Partition({7, 5, 3, 1}));
  EXPECT_EQ(split.mu, Partition({5, 2, 2}));
  EXPECT_EQ(column_insert(staircase(5, 2), Partition()), staircase(5, 2));
}

TEST(ColumnInsert, Errors) {
  EXPECT_THROW(column_extract(Partition{5, 4}, 2, 2), std::invalid_argument);
  EXPECT_THROW(column_insert(Partition{7, 5, 3, 1}, Partition{1, 1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(column_insert(Partition{6, 5}, Partition{1}), std::invalid_argument);
}

TEST(ColumnInsert, RoundTripAndLiteralEquivalence) {
  for (const auto& p : all_rr(30)) {
    auto split = column_extract(p, p.length(), 2);
    EXPECT_EQ(split.mu.size() + split.base.size(), p.size());
    EXPECT_EQ(column_insert(split.base, split.mu), p);
    EXPECT_EQ(literal_column_insert(split.base, split.mu), p);
  }
  for (int n = 0; n <= 14; ++n)
    for (const auto& p : enumerate(n, ConstraintSet::distinct())) {
      auto split = column_extract(p, p.length(), 1);
      EXPECT_EQ(column_insert(split.base, split.mu), p);
    }
}

TEST(Durfee, MergeAndSplit) {
  auto merged = durfee_merge(Partition{2, 2, 1}, Partition{1}, 2);
  EXPECT_EQ(merged, Partition({3, 2, 1}));
  EXPECT_EQ(durfee(merged), 2);
  EXPECT_EQ(durfee_merge(Partition{3, 3, 3, 1}, Partition(), 3), Partition({3, 3, 3, 1}));
  auto s = durfee_split(Partition{4, 3, 3, 2});
  EXPECT_EQ(s.hat2, Partition({3, 3, 3, 2}));
  EXPECT_EQ(s.hat3, Partition({1}));
  EXPECT_EQ(s.side, 3);
  EXPECT_THROW(durfee_merge(Partition{2, 1}, Partition(), 2), std::invalid_argument);
  EXPECT_THROW(durfee_merge(Partition{2, 2}, Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(Durfee, RoundTrip) {
  for (int n = 0; n <= 20; ++n)
    for (const auto& p : enumerate(n, {})) {
      auto s = durfee_split(p);
      EXPECT_EQ(durfee(s.hat2), s.side);
      EXPECT_EQ(s.hat2.length(), p.length());
      EXPECT_EQ(durfee_merge(s.hat2, s.hat3, s.side), p);
    }
}

TEST(EvenExtract, Examples) {
  auto pp = even_extract(Partition{8, 6}, 1);
  EXPECT_EQ(pp, Partition({2, 2}));
  EXPECT_EQ(Partition({8, 6}).size(), pp.size() + 2 * 1 * 2 + 2 * 3);
  EXPECT_EQ(even_extract(Partition{8, 6, 4, 2}, 0), Partition());
  EXPECT_EQ(even_insert(Partition(), 3, 2), Partition({10, 8, 6}));
  EXPECT_THROW(even_extract(Partition{8, 5}, 1), std::invalid_argument);
  EXPECT_THROW(even_extract(Partition{8, 2}, 1), std::invalid_argument);
  EXPECT_THROW(even_insert(Partition{3}, 2, 0), std::invalid_argument);
}

TEST(EvenExtract, RoundTrip) {
  for (int n = 0; n <= 5; ++n) {
    ConstraintSet c = ConstraintSet::distinct();
    c.parity = Parity::even;
    c.min_part = 2 * n + 2;
    for (int size = 0; size <= 24; ++size)
      for (const auto& p : enumerate(size, c)) {
        const int k = p.length();
        auto pp = even_extract(p, n);
        EXPECT_LE(pp.length(), k);
        EXPECT_EQ(p.size(), pp.size() + 2 * n * k + k * (k + 1));
        EXPECT_EQ(even_insert(pp, k, n), p);
      }
  }
}

TEST(Parity, JoinAndSplit) {
  auto j = parity_join(Partition{5, 3, 1}, Partition{10, 8});
  EXPECT_EQ(j, Partition({10, 8, 5, 3, 1}));
  EXPECT_TRUE(smallest_even(j).exceeds(2 * odd_count(j)));
  EXPECT_EQ(parity_join(Partition{7, 1}, Partition()), Partition({7, 1}));
  auto s = parity_split(Partition{11, 3, 1});
  EXPECT_EQ(s.odd_part, Partition({11, 3, 1}));
  EXPECT_EQ(s.even_part, Partition());
  EXPECT_THROW(parity_join(Partition{3, 1}, Partition{4}), std::invalid_argument);
  EXPECT_THROW(parity_split(Partition{2, 1}), std::invalid_argument);
}

TEST(Parity, RoundTrip) {
  ConstraintSet c = ConstraintSet::distinct();
  c.smallest_even_exceeds_twice_odd = true;
  for (int n = 0; n <= 30; ++n)
    for (const auto& p : enumerate(n, c)) {
      auto s = parity_split(p);
      EXPECT_EQ(s.odd_part.length() + s.even_part.length(), p.length());
      EXPECT_EQ(parity_join(s.odd_part, s.even_part), p);
    }
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(is_minimal(Partition{8, 6, 3, 1}));
  EXPECT_FALSE(is_minimal(Partition{10, 6, 3, 1}));
  EXPECT_EQ(extract_two_column(Partition{10, 6, 3, 1}, 1), Partition({8, 6, 3, 1}));
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(is_minimal(staircase(n, 2)));
  EXPECT_THROW(is_minimal(Partition{4, 3}), std::invalid_argument);
}

TEST(Minimal, BaseVector) {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      auto p = vector_to_minimal(ParityVector::base(n, k));
      EXPECT_EQ(p.size(), n * n + 2 * n * k + k * (k + 1));
      EXPECT_TRUE(intermediate_columns(ParityVector::base(n, k)).empty());
    }
}

// The six minimal partitions with two odd and two even parts.
TEST(Minimal, GoldenVectors) {
  const std::vector<std::pair<std::string, Partition>> table = {
      {"(1,1,2,2)", {8, 6, 3, 1}},  {"(1,2,2,1)", {9, 6, 4, 1}},  {"(2,2,1,1)", {9, 7, 4, 2}},
      {"(1,2,1,2)", {10, 7, 4, 1}}, {"(2,1,1,2)", {10, 7, 5, 2}}, {"(2,1,2,1)", {11, 8, 5, 2}}};
  std::set<Partition> seen;
  for (const auto& [vec, part] : table) {
    auto v = ParityVector::parse(vec);
    EXPECT_EQ(vector_to_minimal(v), part) << vec;
    EXPECT_EQ(minimal_to_vector(part), v);
    seen.insert(part);
  }
  auto brute = brute_minimal(2, 2);
  EXPECT_EQ(std::set<Partition>(brute.begin(), brute.end()), seen);
}

TEST(Minimal, MatchesBruteForceAndCounts) {
  for (int M = 0; M <= 6; ++M)
    for (int n = 0; n <= M; ++n) {
      const int k = M - n;
      auto brute = brute_minimal(n, k);
      EXPECT_EQ(static_cast<long long>(brute.size()), binom(M, n)) << n << "," << k;
      for (const auto& p : brute) {
        auto v = minimal_to_vector(p);
        EXPECT_EQ(v.ones(), n);
        EXPECT_EQ(vector_to_minimal(v), p);
        int heights = intermediate_columns(v).size();
        EXPECT_EQ(p.size(), n * n + 2 * n * k + k * (k + 1) + 2 * heights);
      }
    }
}

TEST(Minimal, GeneratingFunction) {
  // All 2^M vectors of length M <= 8, grouped by (n, k).
  for (int M = 0; M <= 8; ++M) {
    std::map<int, std::vector<Term>> by_n;
    for (unsigned mask = 0; mask < (1u << M); ++mask) {
      std::vector<int> e;
      for (int i = 0; i < M; ++i) e.push_back(mask >> i & 1u ? 2 : 1);
      ParityVector v(e);
      auto p = vector_to_minimal(v);
      EXPECT_TRUE(has_gap(p, 2));
      EXPECT_TRUE(is_minimal(p));
      EXPECT_EQ(minimal_to_vector(p), v);
      by_n[v.ones()].push_back({1, q_pow(static_cast<unsigned>(p.size()))});
    }
    for (int n = 0; n <= M; ++n) {
      const int k = M - n;
      auto want = q_binomial(n, k).dilate_q(2).times(1, q_pow(static_cast<unsigned>(n * n + 2 * n * k + k * (k + 1))));
      EXPECT_EQ(Polynomial::from_terms(by_n[n]), want) << n << "," << k;
    }
  }
}

TEST(Hooks, Examples) {
  ParityVector v = ParityVector::parse("(2,1)");
  EXPECT_EQ(intermediate_columns(v), Partition({1}));
  EXPECT_EQ(hooks_fold(v, Partition{1}), Partition({2}));
  EXPECT_EQ(vector_to_minimal(v), Partition({5, 2}));
  auto u = hooks_unfold(Partition{2}, 1, 1);
  EXPECT_EQ(u.vector, v);
  EXPECT_EQ(u.cols, Partition({1}));
  EXPECT_EQ(hooks_fold(ParityVector::parse("1122"), Partition()), Partition());
  EXPECT_EQ(hooks_unfold(Partition(), 2, 3).vector, ParityVector::base(2, 3));
  EXPECT_THROW(hooks_fold(v, Partition{2}), std::invalid_argument);
  EXPECT_THROW(hooks_unfold(Partition{4}, 1, 1), std::invalid_argument);
}

TEST(Hooks, BoxBijection) {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k + n <= 8; ++k) {
      ConstraintSet box;
      box.max_parts = n;
      box.max_part = k;
      std::set<ParityVector> vectors;
      for (int s = 0; s <= n * k; ++s)
        for (const auto& lam : enumerate(s, box)) {
          std::vector<int> doubled;
          for (int v : lam.parts()) doubled.push_back(2 * v);
          Partition b(doubled);
          auto u = hooks_unfold(b, n, k);
          EXPECT_EQ(u.vector.ones(), n);
          EXPECT_EQ(u.vector.twos(), k);
          EXPECT_EQ(hooks_fold(u.vector, u.cols), b);
          EXPECT_EQ(2 * u.cols.size(), b.size());
          EXPECT_EQ(hooks_of(u.vector, u.cols), u.hooks);
          for (std::size_t i = 1; i < u.hooks.hooks.size(); ++i) {
            EXPECT_LT(u.hooks.hooks[i - 1].leg, u.hooks.hooks[i].leg);
            EXPECT_LT(u.hooks.hooks[i - 1].arm, u.hooks.hooks[i].arm);
          }
          vectors.insert(u.vector);
        }
      EXPECT_EQ(static_cast<long long>(vectors.size()), binom(n + k, n));
    }
}

TEST(RrDecompose, WorkedExample) {
  auto d = rr_decompose(Partition{12, 7, 5, 1});
  EXPECT_EQ(d.minimal, Partition({8, 5, 3, 1}));
  EXPECT_EQ(d.vector, ParityVector::parse("(1,1,1,2)"));
  EXPECT_EQ(d.evencols, Partition({3, 1}));
  EXPECT_EQ(rr_compose(d.vector, d.evencols), Partition({12, 7, 5, 1}));
  EXPECT_EQ(rr_decompose(Partition{8, 6, 3, 1}).evencols, Partition());
  EXPECT_THROW(rr_decompose(Partition{5, 4}), std::invalid_argument);
  EXPECT_THROW(rr_compose(ParityVector::parse("12"), Partition{3}), std::invalid_argument);
}

TEST(RrDecompose, RoundTrip) {
  for (const auto& p : all_rr(30)) {
    auto d = rr_decompose(p);
    EXPECT_LE(d.evencols.largest(), d.vector.length());
    EXPECT_EQ(p.size(), vector_to_minimal(d.vector).size() + 2 * d.evencols.size());
    EXPECT_EQ(rr_compose(d.vector, d.evencols), p) << p;
  }
}

TEST(RrDecompose, ComposeThenDecompose) {
  auto g = prop::rng(11);
  std::uniform_int_distribution<int> len(0, 7), bit(1, 2), h(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> e(static_cast<std::size_t>(len(g)));
    for (int& x : e) x = bit(g);
    ParityVector v(e);
    std::vector<int> cols;
    const int M = v.length();
    for (int c = h(g); M > 0 && c > 0; --c) cols.push_back(std::uniform_int_distribution<int>(1, M)(g));
    std::sort(cols.begin(), cols.end(), std::greater<>());
    Partition ec(cols);
    auto d = rr_decompose(rr_compose(v, ec));
    EXPECT_EQ(d.vector, v);
    EXPECT_EQ(d.evencols, ec);
  }
}

// The paper extracts columns "as many times as possible" without fixing an
// order. Every extraction order must reach the same minimal partition.
TEST(RrDecompose, ExtractionIsConfluent) {
  for (const auto& p : all_rr(24)) {
    std::set<Partition> ends;
    std::vector<Partition> stack{p};
    std::set<Partition> visited;
    while (!stack.empty()) {
      Partition cur = stack.back();
      stack.pop_back();
      if (!visited.insert(cur).second) continue;
      auto legal = legal_two_columns(cur);
      if (legal.empty()) ends.insert(cur);
      for (int hgt : legal) stack.push_back(*extract_two_column(cur, hgt));
    }
    EXPECT_EQ(ends.size(), 1u) << p;
    EXPECT_EQ(*ends.begin(), rr_decompose(p).minimal);
  }
}

TEST(TwoModular, Rendering) {
  auto rows = two_modular_rows(Partition{7, 4});
  EXPECT_EQ(rows[0].twos, 3);
  EXPECT_TRUE(rows[0].trailing_one);
  EXPECT_EQ(rows[1].value(), 4);
  EXPECT_EQ(render_two_modular(Partition{7, 4, 1}),
            (std::vector<std::string>{"2 2 2 1", "2 2", "1"}));
}

TEST(ParityVectorType, ParseAndCounts) {
  auto v = ParityVector::parse("(1,2,2,1)");
  EXPECT_EQ(v.ones(), 2);
  EXPECT_EQ(v.twos(), 2);
  EXPECT_EQ(v.to_string(), "(1,2,2,1)");
  EXPECT_EQ(ParityVector::parse("()").length(), 0);
  EXPECT_THROW(ParityVector::parse("(1,3)"), std::invalid_argument);
}
