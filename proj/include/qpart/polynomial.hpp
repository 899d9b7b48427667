#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qpart/monomial.hpp"

namespace qpart {

using Integer = mpz_class;

struct Term {
  Integer coeff;
  Monomial mono;
};

// Sparse polynomial over Z in {q, x, a, b, t}.
//
// Terms are kept sorted ascending in graded lexicographic order with no zero
// coefficients, so two polynomials are equal iff their term lists are equal.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT: integers promote to constants
  explicit Polynomial(Integer constant);

  static Polynomial monomial(Monomial m, Integer coeff = 1);
  // Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(Monomial m) const;
  unsigned max_exponent(Var v) const;
  unsigned min_exponent(Var v) const;  // 0 for the zero polynomial

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  // Multiply every term by c * m.
  Polynomial times(const Integer& c, Monomial m) const;
  // Substitute q -> q^factor.
  Polynomial dilate_q(unsigned factor) const;
  // Keep only terms with q-exponent <= max_q.
  Polynomial truncate_q(unsigned max_q) const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  // Canonical text form: "1 - q - q^2 + q^3", "2*q^4*x^2", "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Exact quotient num / den where den depends on q only and has constant term 1.
// Throws std::domain_error if den is not of that form or the division leaves
// a remainder.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

}  // namespace qpart
