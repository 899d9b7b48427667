#include "qpart/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace qpart {

namespace {

bool term_less(const Term& l, const Term& r) { return l.mono < r.mono; }

// Merge two sorted term lists, scaling the right one by sign.
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs,
                              int sign) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() || j != rhs.end()) {
    if (j == rhs.end() || (i != lhs.end() && i->mono < j->mono)) {
      out.push_back(*i++);
    } else if (i == lhs.end() || j->mono < i->mono) {
      out.push_back({sign > 0 ? Integer(j->coeff) : Integer(-j->coeff), j->mono});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->coeff + j->coeff) : Integer(i->coeff - j->coeff);
      if (c != 0) out.push_back({std::move(c), i->mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.push_back({std::move(constant), Monomial{}});
}

Polynomial Polynomial::monomial(Monomial m, Integer coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({std::move(coeff), m});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Integer Polynomial::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{0, m}, term_less);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

unsigned Polynomial::max_exponent(Var v) const {
  unsigned e = 0;
  for (const auto& t : terms_) e = std::max(e, t.mono.exponent(v));
  return e;
}

unsigned Polynomial::min_exponent(Var v) const {
  if (terms_.empty()) return 0;
  unsigned e = Monomial::kMaxExponent;
  for (const auto& t : terms_) e = std::min(e, t.mono.exponent(v));
  return e;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.size() == 1) return rhs.times(lhs.terms_[0].coeff, lhs.terms_[0].mono);
  if (rhs.size() == 1) return lhs.times(rhs.terms_[0].coeff, rhs.terms_[0].mono);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(lhs.size() * rhs.size());
  Integer prod;
  for (const auto& l : lhs.terms_) {
    for (const auto& r : rhs.terms_) {
      mpz_mul(prod.get_mpz_t(), l.coeff.get_mpz_t(), r.coeff.get_mpz_t());
      acc[l.mono * r.mono] += prod;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({std::move(c), m});
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::times(const Integer& c, Monomial m) const {
  if (c == 0) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves graded lex order.
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
  return p;
}

Polynomial Polynomial::dilate_q(unsigned factor) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_)
    terms.push_back({t.coeff, t.mono.with(Var::q, t.mono.exponent(Var::q) * factor)});
  return from_terms(std::move(terms));
}

Polynomial Polynomial::truncate_q(unsigned max_q) const {
  Polynomial p;
  for (const auto& t : terms_)
    if (t.mono.exponent(Var::q) <= max_q) p.terms_.push_back(t);
  return p;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].mono != rhs.terms_[i].mono) return false;
    if (lhs.terms_[i].coeff != rhs.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += t.mono.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  const unsigned den_deg = den.max_exponent(Var::q);
  std::vector<Integer> d(den_deg + 1);
  for (const auto& t : den.terms()) {
    if (!t.mono.aux().is_one())
      throw std::domain_error("exact_quotient: divisor must depend on q only");
    d[t.mono.exponent(Var::q)] = t.coeff;
  }
  if (d.empty() || d[0] != 1)
    throw std::domain_error("exact_quotient: divisor must have constant term 1");
  if (num.is_zero()) return {};

  const unsigned num_deg = num.max_exponent(Var::q);
  std::vector<Polynomial> rest(num_deg + 1);
  {
    std::vector<std::vector<Term>> buckets(num_deg + 1);
    for (const auto& t : num.terms())
      buckets[t.mono.exponent(Var::q)].push_back({t.coeff, t.mono.aux()});
    for (unsigned i = 0; i <= num_deg; ++i) rest[i] = Polynomial::from_terms(std::move(buckets[i]));
  }
  // Power-series division; exact iff every slice above num_deg - den_deg vanishes.
  std::vector<Polynomial> quot(num_deg + 1);
  for (unsigned i = 0; i <= num_deg; ++i) {
    Polynomial r = rest[i];
    for (unsigned j = 1; j <= std::min(i, den_deg); ++j)
      if (d[j] != 0) r -= quot[i - j].times(d[j], Monomial{});
    quot[i] = std::move(r);
  }
  std::vector<Term> out;
  for (unsigned i = 0; i <= num_deg; ++i) {
    if (quot[i].is_zero()) continue;
    if (i + den_deg > num_deg) throw std::domain_error("exact_quotient: division is not exact");
    for (const auto& t : quot[i].terms()) out.push_back({t.coeff, t.mono.with(Var::q, i)});
  }
  Polynomial q = Polynomial::from_terms(std::move(out));
  if (!(q * den == num)) throw std::domain_error("exact_quotient: division is not exact");
  return q;
}

}  // namespace qpart
