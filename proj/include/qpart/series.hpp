#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/polynomial.hpp"

namespace qpart {

// Element of Z[x, a, b, t][[q]] / (q^(T+1)).
//
// Stored as one aux polynomial (in x, a, b, t) per power of q. Only q is
// truncated; the other variables never are.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned trunc);

  static TruncatedSeries one(unsigned trunc);
  static TruncatedSeries from_polynomial(const Polynomial& p, unsigned trunc);
  static TruncatedSeries from_term(const Integer& c, Monomial m, unsigned trunc);

  unsigned trunc() const { return trunc_; }

  // Coefficient of q^q_exp as a polynomial in x, a, b, t.
  // Throws std::out_of_range past the truncation order.
  const Polynomial& coeff(unsigned q_exp) const;
  Polynomial body() const;
  bool is_zero() const;

  TruncatedSeries truncated(unsigned trunc) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries l, const TruncatedSeries& r) { return l += r; }
  friend TruncatedSeries operator-(TruncatedSeries l, const TruncatedSeries& r) { return l -= r; }
  friend TruncatedSeries operator*(const TruncatedSeries& l, const TruncatedSeries& r);
  TruncatedSeries operator-() const;

  // this * c * m
  TruncatedSeries times(const Integer& c, Monomial m) const;
  // this * (1 - c*m)
  TruncatedSeries& mul_one_minus(const Integer& c, Monomial m);
  // this / (1 - c*m); m must carry a positive power of q.
  TruncatedSeries& div_one_minus(const Integer& c, Monomial m);

  // x -> -x
  TruncatedSeries flip_x() const;

  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  std::string to_string() const;

 private:
  void require_same_trunc(const TruncatedSeries& rhs, const char* op) const;

  unsigned trunc_;
  std::vector<Polynomial> slices_;
};

TruncatedSeries series_mul(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// Multiplicative inverse. The q^0 part of s must be exactly 1.
TruncatedSeries series_invert(const TruncatedSeries& s);

struct SeriesDifference {
  Monomial mono;
  Integer lhs;
  Integer rhs;
};

struct SeriesComparison {
  bool equal = true;
  std::optional<SeriesDifference> witness;  // least differing monomial
  explicit operator bool() const { return equal; }
};

SeriesComparison series_equal(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
SeriesComparison polynomial_equal(const Polynomial& lhs, const Polynomial& rhs);

// Signed base c*m of a Pochhammer symbol, e.g. {-1, b*t*q^3} for (-btq^3; q).
struct PochhammerBase {
  Integer coeff = 1;
  Monomial mono;
  PochhammerBase() = default;
  PochhammerBase(Monomial m) : mono(m) {}  // NOLINT: plain monomial bases are the common case
  PochhammerBase(Integer c, Monomial m) : coeff(std::move(c)), mono(m) {}
};

// prod_{i=0}^{n-1} (1 - base * step^i), truncated at T.
TruncatedSeries pochhammer_finite(const PochhammerBase& base, unsigned n, unsigned trunc,
                                  Monomial step = q_pow(1));
// prod_{i>=0} (1 - base * step^i); base and step need a positive power of q.
TruncatedSeries pochhammer_infinite(const PochhammerBase& base, unsigned trunc,
                                    Monomial step = q_pow(1));
// 1 / pochhammer_finite(base, n, T, step) computed factor by factor.
TruncatedSeries pochhammer_finite_inverse(const PochhammerBase& base, unsigned n, unsigned trunc,
                                          Monomial step = q_pow(1));

// Finite Pochhammer in q alone, (q^first; q^step)_n as an exact polynomial.
// first may be negative or zero; the product is 0 whenever a factor is (1 - 1).
// Throws std::domain_error if a nonzero product would contain a negative power.
Polynomial q_pochhammer_poly(long first, long step, long n);

}  // namespace qpart
