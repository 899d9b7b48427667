#include "qpart/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qpart {

namespace {

using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;

void accumulate_product(const Polynomial& lhs, const Polynomial& rhs, Accumulator& acc) {
  Integer prod;
  for (const auto& l : lhs.terms()) {
    for (const auto& r : rhs.terms()) {
      mpz_mul(prod.get_mpz_t(), l.coeff.get_mpz_t(), r.coeff.get_mpz_t());
      acc[l.mono * r.mono] += prod;
    }
  }
}

Polynomial drain(Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({std::move(c), m});
  acc.clear();
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

TruncatedSeries::TruncatedSeries(unsigned trunc) : trunc_(trunc), slices_(trunc + 1) {}

TruncatedSeries TruncatedSeries::one(unsigned trunc) {
  TruncatedSeries s(trunc);
  s.slices_[0] = Polynomial(1);
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, unsigned trunc) {
  TruncatedSeries s(trunc);
  std::vector<std::vector<Term>> buckets(trunc + 1);
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono.exponent(Var::q);
    if (e <= trunc) buckets[e].push_back({t.coeff, t.mono.aux()});
  }
  for (unsigned i = 0; i <= trunc; ++i) s.slices_[i] = Polynomial::from_terms(std::move(buckets[i]));
  return s;
}

TruncatedSeries TruncatedSeries::from_term(const Integer& c, Monomial m, unsigned trunc) {
  TruncatedSeries s(trunc);
  const unsigned e = m.exponent(Var::q);
  if (e <= trunc) s.slices_[e] = Polynomial::monomial(m.aux(), c);
  return s;
}

const Polynomial& TruncatedSeries::coeff(unsigned q_exp) const {
  if (q_exp > trunc_)
    throw std::out_of_range("coefficient of q^" + std::to_string(q_exp) +
                            " is beyond truncation order " + std::to_string(trunc_));
  return slices_[q_exp];
}

Polynomial TruncatedSeries::body() const {
  std::vector<Term> terms;
  for (unsigned i = 0; i <= trunc_; ++i)
    for (const auto& t : slices_[i].terms()) terms.push_back({t.coeff, t.mono.with(Var::q, i)});
  return Polynomial::from_terms(std::move(terms));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(slices_.begin(), slices_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(unsigned trunc) const {
  if (trunc > trunc_)
    throw std::invalid_argument("cannot raise truncation order from " + std::to_string(trunc_) +
                                " to " + std::to_string(trunc));
  TruncatedSeries s(trunc);
  std::copy(slices_.begin(), slices_.begin() + trunc + 1, s.slices_.begin());
  return s;
}

void TruncatedSeries::require_same_trunc(const TruncatedSeries& rhs, const char* op) const {
  if (rhs.trunc_ != trunc_)
    throw std::invalid_argument(std::string(op) + ": mismatched truncation orders " +
                                std::to_string(trunc_) + " and " + std::to_string(rhs.trunc_));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_trunc(rhs, "series addition");
  for (unsigned i = 0; i <= trunc_; ++i) slices_[i] += rhs.slices_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_trunc(rhs, "series subtraction");
  for (unsigned i = 0; i <= trunc_; ++i) slices_[i] -= rhs.slices_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  lhs.require_same_trunc(rhs, "series multiplication");
  const unsigned T = lhs.trunc_;
  TruncatedSeries out(T);
  Accumulator acc;
  for (unsigned d = 0; d <= T; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      const Polynomial& l = lhs.slices_[i];
      const Polynomial& r = rhs.slices_[d - i];
      if (l.is_zero() || r.is_zero()) continue;
      accumulate_product(l, r, acc);
    }
    out.slices_[d] = drain(acc);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& p : s.slices_) p = -p;
  return s;
}

TruncatedSeries TruncatedSeries::times(const Integer& c, Monomial m) const {
  TruncatedSeries s(trunc_);
  const unsigned shift = m.exponent(Var::q);
  const Monomial aux = m.aux();
  for (unsigned i = 0; i + shift <= trunc_; ++i) s.slices_[i + shift] = slices_[i].times(c, aux);
  return s;
}

TruncatedSeries& TruncatedSeries::mul_one_minus(const Integer& c, Monomial m) {
  const unsigned shift = m.exponent(Var::q);
  const Monomial aux = m.aux();
  if (shift > trunc_) return *this;
  // Descending so that slices_[d - shift] is still the old value.
  for (unsigned d = trunc_ + 1; d-- > shift;) slices_[d] -= slices_[d - shift].times(c, aux);
  return *this;
}

TruncatedSeries& TruncatedSeries::div_one_minus(const Integer& c, Monomial m) {
  const unsigned shift = m.exponent(Var::q);
  if (shift == 0)
    throw std::domain_error("1/(1 - " + m.to_string() + ") does not truncate in q");
  const Monomial aux = m.aux();
  for (unsigned d = shift; d <= trunc_; ++d) slices_[d] += slices_[d - shift].times(c, aux);
  return *this;
}

TruncatedSeries TruncatedSeries::flip_x() const {
  TruncatedSeries s(trunc_);
  for (unsigned i = 0; i <= trunc_; ++i) {
    std::vector<Term> terms = slices_[i].terms();
    for (auto& t : terms)
      if (t.mono.exponent(Var::x) % 2 == 1) t.coeff = -t.coeff;
    s.slices_[i] = Polynomial::from_terms(std::move(terms));
  }
  return s;
}

bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  return lhs.trunc_ == rhs.trunc_ && lhs.slices_ == rhs.slices_;
}

std::string TruncatedSeries::to_string() const { return body().to_string(); }

TruncatedSeries series_mul(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  return lhs * rhs;
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  if (!(s.coeff(0) == Polynomial(1)))
    throw std::domain_error("series is not invertible: q^0 coefficient is " +
                            s.coeff(0).to_string() + ", expected 1");
  const unsigned T = s.trunc();
  std::vector<Polynomial> r(T + 1);
  r[0] = Polynomial(1);
  Accumulator acc;
  for (unsigned d = 1; d <= T; ++d) {
    for (unsigned j = 1; j <= d; ++j) {
      if (s.coeff(j).is_zero() || r[d - j].is_zero()) continue;
      accumulate_product(s.coeff(j), r[d - j], acc);
    }
    r[d] = -drain(acc);
  }
  TruncatedSeries out(T);
  for (unsigned d = 0; d <= T; ++d)
    out += TruncatedSeries::from_polynomial(r[d].times(1, q_pow(d)), T);
  return out;
}

SeriesComparison polynomial_equal(const Polynomial& lhs, const Polynomial& rhs) {
  SeriesComparison cmp;
  const Polynomial diff = lhs - rhs;
  if (diff.is_zero()) return cmp;
  const Monomial least = diff.terms().front().mono;
  cmp.equal = false;
  cmp.witness = SeriesDifference{least, lhs.coeff(least), rhs.coeff(least)};
  return cmp;
}

SeriesComparison series_equal(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.trunc() != rhs.trunc())
    throw std::invalid_argument("series_equal: mismatched truncation orders " +
                                std::to_string(lhs.trunc()) + " and " + std::to_string(rhs.trunc()));
  SeriesComparison cmp;
  for (unsigned d = 0; d <= lhs.trunc(); ++d) {
    const Polynomial diff = lhs.coeff(d) - rhs.coeff(d);
    if (diff.is_zero()) continue;
    const Monomial m = diff.terms().front().mono.with(Var::q, d);
    if (!cmp.witness || m < cmp.witness->mono) {
      const Monomial aux = m.aux();
      cmp.witness = SeriesDifference{m, lhs.coeff(d).coeff(aux), rhs.coeff(d).coeff(aux)};
    }
    cmp.equal = false;
  }
  return cmp;
}

TruncatedSeries pochhammer_finite(const PochhammerBase& base, unsigned n, unsigned trunc,
                                  Monomial step) {
  TruncatedSeries s = TruncatedSeries::one(trunc);
  Monomial factor = base.mono;
  for (unsigned i = 0; i < n; ++i) {
    if (factor.exponent(Var::q) > trunc) break;  // remaining factors are 1 mod q^(T+1)
    s.mul_one_minus(base.coeff, factor);
    if (i + 1 < n) factor = factor * step;
  }
  return s;
}

TruncatedSeries pochhammer_infinite(const PochhammerBase& base, unsigned trunc, Monomial step) {
  if (base.mono.exponent(Var::q) == 0 || step.exponent(Var::q) == 0)
    throw std::domain_error("infinite Pochhammer product with base " + base.mono.to_string() +
                            " and step " + step.to_string() + " diverges under q-truncation");
  const unsigned factors = trunc / step.exponent(Var::q) + 1;
  return pochhammer_finite(base, factors, trunc, step);
}

TruncatedSeries pochhammer_finite_inverse(const PochhammerBase& base, unsigned n, unsigned trunc,
                                          Monomial step) {
  TruncatedSeries s = TruncatedSeries::one(trunc);
  Monomial factor = base.mono;
  for (unsigned i = 0; i < n; ++i) {
    if (factor.exponent(Var::q) > trunc) break;
    s.div_one_minus(base.coeff, factor);
    if (i + 1 < n) factor = factor * step;
  }
  return s;
}

Polynomial q_pochhammer_poly(long first, long step, long n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer_poly: negative length");
  bool negative = false;
  for (long i = 0; i < n; ++i) {
    const long e = first + i * step;
    if (e == 0) return {};
    if (e < 0) negative = true;
  }
  if (negative)
    throw std::domain_error("q_pochhammer_poly: product has negative powers of q");
  Polynomial p(1);
  for (long i = 0; i < n; ++i)
    p = p - p.times(1, q_pow(static_cast<unsigned>(first + i * step)));
  return p;
}

}  // namespace qpart
