#include <array>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "qpart/partition.hpp"
#include "qpart/qbinomial.hpp"
#include "qpart/series.hpp"
#include "../support/seed.hpp"

using namespace qpart;

namespace {

TruncatedSeries S(const Polynomial& p, unsigned T) { return TruncatedSeries::from_polynomial(p, T); }

Polynomial Q(unsigned e, long c = 1) { return Polynomial::monomial(q_pow(e), c); }

// Dense oracle: exponent tuple -> coefficient, multiplied naively.
using Dense = std::map<std::array<unsigned, 5>, long long>;

Dense dense_of(const Polynomial& p) {
  Dense d;
  for (const auto& t : p.terms()) {
    std::array<unsigned, 5> e{};
    for (Var v : kAllVars) e[static_cast<int>(v)] = t.mono.exponent(v);
    d[e] += t.coeff.get_si();
  }
  return d;
}

Dense dense_mul(const Dense& l, const Dense& r, unsigned T) {
  Dense out;
  for (const auto& [e1, c1] : l)
    for (const auto& [e2, c2] : r) {
      std::array<unsigned, 5> e{};
      for (int i = 0; i < 5; ++i) e[i] = e1[i] + e2[i];
      if (e[0] > T) continue;
      out[e] += c1 * c2;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Polynomial random_poly(std::mt19937_64& g, unsigned T, int terms) {
  std::uniform_int_distribution<unsigned> qd(0, T), ad(0, 3);
  std::uniform_int_distribution<long> cd(-5, 5);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m{{Var::q, qd(g)}, {Var::x, ad(g)}, {Var::a, ad(g) % 2}, {Var::t, ad(g) % 2}};
    ts.push_back({cd(g), m});
  }
  return Polynomial::from_terms(std::move(ts));
}

}  // namespace

TEST(SeriesMul, DifferenceOfSquares) {
  EXPECT_EQ(series_mul(S(1 + Q(1), 3), S(1 - Q(1), 3)), S(1 - Q(2), 3));
}

TEST(SeriesMul, IdentityElement) {
  auto g = prop::rng(1);
  auto s = S(random_poly(g, 6, 8), 6);
  EXPECT_EQ(series_mul(TruncatedSeries::one(6), s), s);
}

TEST(SeriesMul, DropsTermsPastTruncation) {
  auto geo = S(1 + Q(1) + Q(2) + Q(3), 3);
  EXPECT_EQ(series_mul(geo, S(1 - Q(1), 3)), TruncatedSeries::one(3));
}

TEST(SeriesMul, MismatchedTruncationIsAnError) {
  EXPECT_THROW(series_mul(S(1, 3), S(1, 4)), std::invalid_argument);
}

TEST(SeriesMul, AgreesWithDenseOracle) {
  auto g = prop::rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto l = random_poly(g, 7, 10), r = random_poly(g, 7, 10);
    auto got = series_mul(S(l, 7), S(r, 7)).body();
    EXPECT_EQ(dense_of(got), dense_mul(dense_of(l), dense_of(r), 7));
  }
}

TEST(SeriesInvert, GeometricSeries) {
  EXPECT_EQ(series_invert(S(1 - Q(1), 4)), S(1 + Q(1) + Q(2) + Q(3) + Q(4), 4));
  EXPECT_EQ(series_invert(TruncatedSeries::one(5)), TruncatedSeries::one(5));
}

TEST(SeriesInvert, PartsAtMostTwo) {
  auto s = S((1 - Q(1)) * (1 - Q(2)), 4);
  EXPECT_EQ(series_invert(s), S(1 + Q(1) + 2 * Q(2) + 2 * Q(3) + 3 * Q(4), 4));
}

TEST(SeriesInvert, NonUnitConstantIsAnError) {
  EXPECT_THROW(series_invert(S(2 + Q(1), 3)), std::domain_error);
  EXPECT_THROW(series_invert(S(Q(1), 3)), std::domain_error);
}

TEST(Pochhammer, Finite) {
  EXPECT_EQ(pochhammer_finite(q_pow(1), 0, 5), TruncatedSeries::one(5));
  EXPECT_EQ(pochhammer_finite(q_pow(1), 2, 5), S(1 - Q(1) - Q(2) + Q(3), 5));
  Monomial atq{{Var::a, 1}, {Var::t, 1}, {Var::q, 1}};
  EXPECT_EQ(pochhammer_finite(atq, 1, 5), S(1 - Polynomial::monomial(atq), 5));
}

TEST(Pochhammer, Infinite) {
  EXPECT_EQ(pochhammer_infinite(q_pow(1), 3), S(1 - Q(1) - Q(2), 3));
  EXPECT_EQ(pochhammer_infinite(q_pow(4), 3), TruncatedSeries::one(3));
  Monomial xq2{{Var::x, 1}, {Var::q, 2}};
  auto expect = S(1 - Polynomial::monomial(xq2) - Polynomial::monomial(xq2 * q_pow(2)), 4);
  EXPECT_EQ(pochhammer_infinite(xq2, 4, q_pow(2)), expect);
}

TEST(Pochhammer, InfiniteWithoutQIsAnError) {
  EXPECT_THROW(pochhammer_infinite(x_pow(1), 4), std::domain_error);
}

TEST(Pochhammer, EulerPentagonal) {
  // Oracle: prod (1 - q^i) = sum (-1)^k q^{k(3k-1)/2} over all integers k.
  const unsigned T = 40;
  std::vector<Term> ts;
  for (long k = -10; k <= 10; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e <= static_cast<long>(T)) ts.push_back({k % 2 ? -1 : 1, q_pow(static_cast<unsigned>(e))});
  }
  EXPECT_EQ(pochhammer_infinite(q_pow(1), T), S(Polynomial::from_terms(ts), T));
}

TEST(Pochhammer, InverseMatchesInvert) {
  Monomial base{{Var::x, 1}, {Var::q, 2}};
  EXPECT_EQ(pochhammer_finite_inverse(base, 4, 12),
            series_invert(pochhammer_finite(base, 4, 12)));
}

TEST(Pochhammer, SplittingProperty) {
  auto g = prop::rng(3);
  std::uniform_int_distribution<unsigned> ed(0, 2), qd(1, 3), nd(0, 4);
  for (int trial = 0; trial < 25; ++trial) {
    Monomial c{{Var::q, qd(g)}, {Var::x, ed(g)}, {Var::b, ed(g)}};
    unsigned m = nd(g), n = nd(g);
    const unsigned T = 16;
    auto whole = pochhammer_finite(c, m + n, T);
    auto split = pochhammer_finite(c, m, T) * pochhammer_finite(c * q_pow(m), n, T);
    EXPECT_EQ(whole, split) << c.to_string() << " m=" << m << " n=" << n;
  }
}

TEST(Pochhammer, PolynomialForm) {
  EXPECT_EQ(q_pochhammer_poly(1, 1, 2), (1 - Q(1)) * (1 - Q(2)));
  EXPECT_EQ(q_pochhammer_poly(0, 2, 3), Polynomial());
  EXPECT_EQ(q_pochhammer_poly(5, 2, 0), Polynomial(1));
}

TEST(QBinomial, SpecExamples) {
  EXPECT_EQ(q_binomial(2, 2), 1 + Q(1) + 2 * Q(2) + Q(3) + Q(4));
  EXPECT_EQ(q_binomial(7, 0), Polynomial(1));
  EXPECT_EQ(q_binomial(0, -1), Polynomial());
}

TEST(QBinomial, CountsPartitionsInBox) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      auto poly = q_binomial(a, b);
      ConstraintSet c;
      c.max_parts = a;
      c.max_part = b;
      for (int m = 0; m <= a * b + 1; ++m)
        EXPECT_EQ(poly.coeff(q_pow(static_cast<unsigned>(m))),
                  Integer(static_cast<long>(enumerate(m, c).size())))
            << a << "x" << b << " at q^" << m;
      EXPECT_EQ(poly.max_exponent(Var::q), static_cast<unsigned>(a * b));
    }
}

TEST(QBinomial, MatchesPochhammerQuotient) {
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      auto num = q_pochhammer_poly(1, 1, n);
      auto den = q_pochhammer_poly(1, 1, k) * q_pochhammer_poly(1, 1, n - k);
      EXPECT_EQ(exact_quotient(num, den), q_choose(n, k));
    }
}

TEST(QBinomial, Palindromic) {
  for (long a = 0; a <= 5; ++a)
    for (long b = 0; b <= 5; ++b) {
      auto p = q_binomial(a, b);
      for (long m = 0; m <= a * b; ++m)
        EXPECT_EQ(p.coeff(q_pow(static_cast<unsigned>(m))),
                  p.coeff(q_pow(static_cast<unsigned>(a * b - m))));
    }
}

TEST(Coeff, ReadsSlices) {
  auto x = Polynomial::monomial(x_pow(1)), x2 = Polynomial::monomial(x_pow(2));
  auto s = S(1 + x * Q(1) + (x + x2) * Q(4), 5);
  EXPECT_EQ(s.coeff(4), x + x2);
  EXPECT_EQ(s.coeff(0), Polynomial(1));
  EXPECT_TRUE(TruncatedSeries(5).coeff(3).is_zero());
  EXPECT_THROW(s.coeff(6), std::out_of_range);
}

TEST(SeriesEqual, Witness) {
  auto s = S(1 + Q(1), 4);
  EXPECT_TRUE(series_equal(s, s).equal);
  auto cmp = series_equal(s, TruncatedSeries::one(4));
  ASSERT_FALSE(cmp.equal);
  ASSERT_TRUE(cmp.witness);
  EXPECT_EQ(cmp.witness->mono, q_pow(1));
  EXPECT_EQ(cmp.witness->lhs, 1);
  EXPECT_EQ(cmp.witness->rhs, 0);
  EXPECT_THROW(series_equal(s, TruncatedSeries::one(5)), std::invalid_argument);
}

TEST(SeriesEqual, WitnessIsLeastInGradedOrder) {
  auto l = S(Q(3) + Polynomial::monomial(x_pow(1) * q_pow(1)), 4);
  auto r = S(Polynomial(), 4);
  EXPECT_EQ(series_equal(l, r).witness->mono, x_pow(1) * q_pow(1));
}

TEST(SeriesRing, Laws) {
  auto g = prop::rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned T = 8;
    auto r = S(random_poly(g, T, 6), T), s = S(random_poly(g, T, 6), T), u = S(random_poly(g, T, 6), T);
    EXPECT_EQ(r * (s + u), r * s + r * u);
    EXPECT_EQ(r * s, s * r);
    EXPECT_EQ((r * s) * u, r * (s * u));
  }
}

TEST(SeriesRing, InversionOfRandomPochhammerProducts) {
  auto g = prop::rng(5);
  std::uniform_int_distribution<unsigned> ed(0, 2), qd(1, 3), nd(0, 4);
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned T = 12;
    auto s = TruncatedSeries::one(T);
    for (int f = 0; f < 3; ++f) {
      Monomial c{{Var::q, qd(g)}, {Var::a, ed(g)}, {Var::t, ed(g)}};
      s = s * pochhammer_finite(c, nd(g), T);
    }
    EXPECT_EQ(s * series_invert(s), TruncatedSeries::one(T));
  }
}

TEST(SeriesRing, TruncationCoherence) {
  auto g = prop::rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto l = random_poly(g, 12, 8), r = random_poly(g, 12, 8);
    auto high = (S(l, 12) * S(r, 12)).truncated(7);
    EXPECT_EQ(high, S(l, 7) * S(r, 7));
  }
  Monomial base{{Var::x, 1}, {Var::q, 1}};
  EXPECT_EQ(pochhammer_infinite(base, 15).truncated(9), pochhammer_infinite(base, 9));
}

TEST(SeriesText, CanonicalForm) {
  EXPECT_EQ(pochhammer_finite(q_pow(1), 2, 5).to_string(), "1 - q - q^2 + q^3");
  EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(ExactQuotient, RejectsRemainder) {
  EXPECT_THROW(exact_quotient(1 + Q(1), 1 - Q(2)), std::domain_error);
}
