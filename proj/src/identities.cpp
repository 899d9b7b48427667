#include "qpart/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "qpart/qbinomial.hpp"

namespace qpart {

namespace {

constexpr unsigned kMaxTrunc = 400;

using Builder = std::function<TruncatedSeries(const Params&, unsigned)>;

Monomial mono(unsigned q, unsigned x = 0, unsigned a = 0, unsigned b = 0, unsigned t = 0) {
  return Monomial{{Var::q, q}, {Var::x, x}, {Var::a, a}, {Var::b, b}, {Var::t, t}};
}

const Monomial kQ = mono(1);
const Monomial kQ2 = mono(2);
const Monomial kAtq = mono(1, 0, 1, 0, 1);
const Monomial kBtq = mono(1, 0, 0, 1, 1);

unsigned u(long v) { return static_cast<unsigned>(v); }

long floor_div2(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

TruncatedSeries term(long sign, Monomial m, unsigned T) {
  return TruncatedSeries::from_term(sign, m, T);
}

TruncatedSeries inv_poch(const PochhammerBase& base, long n, unsigned T, Monomial step = kQ) {
  return pochhammer_finite_inverse(base, u(n), T, step);
}

TruncatedSeries poly(const Polynomial& p, unsigned T) { return TruncatedSeries::from_polynomial(p, T); }

// ---------------------------------------------------------------- ismail

TruncatedSeries ismail_raw_left(const Params&, unsigned T) {
  auto pre = pochhammer_infinite(kAtq, T) * series_invert(pochhammer_infinite(kQ, T));
  TruncatedSeries sum(T);
  for (long k = 0; k * (k + 1) / 2 <= T; ++k)
    sum += term(k % 2 ? -1 : 1, mono(u(k * (k + 1) / 2), 0, 0, u(k), u(k)), T) *
           inv_poch(kQ, k, T) * inv_poch(kAtq, k, T);
  return pre * sum;
}

TruncatedSeries ismail_raw_right(const Params&, unsigned T) {
  auto pre = pochhammer_infinite(kAtq, T) * pochhammer_infinite(kBtq, T) *
             series_invert(pochhammer_infinite(kQ, T));
  TruncatedSeries sum(T);
  for (long k = 0; k * (3 * k + 1) / 2 <= T; ++k)
    sum += term(k % 2 ? -1 : 1, mono(u(k * (3 * k + 1) / 2), 0, u(k), u(k), u(2 * k)), T) *
           inv_poch(kAtq, k, T) * inv_poch(kBtq, k, T) * inv_poch(kQ, k, T);
  return pre * sum;
}

TruncatedSeries ismail_simpl_left(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long k = 0; k * (k + 1) / 2 <= T; ++k)
    sum += term(1, mono(u(k * (k + 1) / 2), 0, 0, u(k), u(k)), T) * inv_poch(kQ, k, T) *
           inv_poch(kAtq, k, T);
  return sum;
}

TruncatedSeries ismail_simpl_right(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long m = 0; m * (m + 1) / 2 + m * m <= T; ++m) {
    auto head = term(1, mono(u(m * (m + 1) / 2 + m * m), 0, u(m), u(m), u(2 * m)), T);
    auto tail = pochhammer_infinite({-1, kBtq * mono(u(m))}, T);
    sum += head * tail * inv_poch(kQ, m, T) * inv_poch(kAtq, m, T);
  }
  return sum;
}

// Double sum over m <= k with the 1/((q;q)_{k-m} (q;q)_m) split.
TruncatedSeries main_connection_split(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long m = 0; m * m + m * (m + 1) / 2 <= T; ++m)
    for (long k = m; k * (k + 1) / 2 + m * m <= T; ++k)
      sum += term(1, mono(u(k * (k + 1) / 2 + m * m), 0, u(m), u(k), u(k + m)), T) *
             inv_poch(kQ, k - m, T) * inv_poch(kQ, m, T) * inv_poch(kAtq, m, T);
  return sum;
}

// Same double sum with the q-binomial [k over m]_q introduced.
TruncatedSeries main_connection_binomial(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long m = 0; m * m + m * (m + 1) / 2 <= T; ++m)
    for (long k = m; k * (k + 1) / 2 + m * m <= T; ++k)
      sum += term(1, mono(u(k * (k + 1) / 2 + m * m), 0, u(m), u(k), u(k + m)), T) *
             inv_poch(kQ, k, T) * poly(q_choose(k, m), T) * inv_poch(kAtq, m, T);
  return sum;
}

WeightSpec parts_weight(Monomial m) { return WeightSpec::counting_parts(m); }

TruncatedSeries pair_side(PairRelation rel, std::optional<long> bound, unsigned T) {
  ConstraintSet d = ConstraintSet::distinct(), p;
  if (bound) {
    d.max_part = static_cast<int>(*bound);
    p.max_part = static_cast<int>(*bound);
  }
  return weighted_pair_gf(d, p, rel, parts_weight(mono(0, 0, 0, 1, 1)),
                          parts_weight(mono(0, 0, 1, 0, 1)), T);
}

TruncatedSeries thmL_left(const Params& p, unsigned T) {
  const long N = p.at("N");
  TruncatedSeries sum(T);
  for (long k = 0; k <= N && k * (k + 1) / 2 <= T; ++k)
    sum += term(1, mono(u(k * (k + 1) / 2), 0, 0, u(k), u(k)), T) * inv_poch(kAtq, k, T) *
           poly(q_choose(N, k), T);
  return sum;
}

TruncatedSeries thmL_right(const Params& p, unsigned T) {
  const long N = p.at("N");
  TruncatedSeries sum(T);
  for (long m = 0; m <= N && m * (m + 1) / 2 + m * m <= T; ++m) {
    auto head = term(1, mono(u(m * (m + 1) / 2 + m * m), 0, u(m), u(m), u(2 * m)), T);
    auto tail = pochhammer_finite({-1, kBtq * mono(u(m))}, u(N - m), T);
    sum += head * tail * inv_poch(kAtq, m, T) * poly(q_choose(N, m), T);
  }
  return sum;
}

// ------------------------------------------------------------- ramanujan

TruncatedSeries rr_sum_side(long sign_x, unsigned T) {
  TruncatedSeries sum(T);
  for (long n = 0; n * n <= T; ++n)
    sum += term(sign_x < 0 && n % 2 ? -1 : 1, mono(u(n * n), u(n)), T) * inv_poch(kQ, n, T);
  return sum;
}

TruncatedSeries ramanujan_raw_right(const Params&, unsigned T) {
  const Monomial xq2 = mono(2, 1);
  TruncatedSeries sum(T);
  for (long n = 0; n * n <= T; ++n)
    sum += term(n % 2 ? -1 : 1, mono(u(n * n), u(n)), T) * inv_poch(kQ2, n, T, kQ2) *
           inv_poch(xq2, n, T, kQ2);
  return pochhammer_infinite(xq2, T, kQ2) * sum;
}

TruncatedSeries ramanujan_right(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long n = 0; n * n <= T; ++n)
    sum += term(1, mono(u(n * n), u(n)), T) * inv_poch(kQ2, n, T, kQ2) *
           pochhammer_infinite({-1, mono(u(2 * n + 2), 1)}, T, kQ2);
  return sum;
}

TruncatedSeries rr_oracle(unsigned T) {
  return weighted_gf(ConstraintSet::rr(), parts_weight(x_pow(1)), T);
}

TruncatedSeries distinct_even_oracle(unsigned T) {
  ConstraintSet c = ConstraintSet::distinct();
  c.smallest_even_exceeds_twice_odd = true;
  return weighted_gf(c, parts_weight(x_pow(1)), T);
}

TruncatedSeries dist_even_product(const Params& p, unsigned T) {
  const long n = p.at("n");
  return pochhammer_infinite({-1, mono(u(2 * n + 2), 1)}, T, kQ2);
}

TruncatedSeries dist_even_sum(const Params& p, unsigned T) {
  const long n = p.at("n");
  TruncatedSeries sum(T);
  for (long k = 0; 2 * n * k + k * (k + 1) <= T; ++k)
    sum += term(1, mono(u(2 * n * k + k * (k + 1)), u(k)), T) * inv_poch(kQ2, k, T, kQ2);
  return sum;
}

long nk_degree(long n, long k) { return n * n + 2 * n * k + k * (k + 1); }

TruncatedSeries nk_split(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long n = 0; n * n <= T; ++n)
    for (long k = 0; nk_degree(n, k) <= T; ++k)
      sum += term(1, mono(u(nk_degree(n, k)), u(n + k)), T) * inv_poch(kQ2, n, T, kQ2) *
             inv_poch(kQ2, k, T, kQ2);
  return sum;
}

TruncatedSeries nk_binomial(const Params&, unsigned T) {
  TruncatedSeries sum(T);
  for (long n = 0; n * n <= T; ++n)
    for (long k = 0; nk_degree(n, k) <= T; ++k)
      sum += term(1, mono(u(nk_degree(n, k)), u(n + k)), T) * inv_poch(kQ2, n + k, T, kQ2) *
             poly(q_choose(n + k, k).dilate_q(2), T);
  return sum;
}

// ----------------------------------------------- bounded generating functions

TruncatedSeries gf_bdd_product(const Params& p, unsigned T) {
  const long j = p.at("j"), N = p.at("N");
  return inv_poch(mono(u(j), 1), N - j + 1, T);
}

TruncatedSeries gf_bdd_smallest(const Params& p, unsigned T) {
  const long j = p.at("j"), N = p.at("N");
  auto sum = TruncatedSeries::one(T);
  for (long i = j; i <= N && i <= T; ++i)
    sum += term(1, mono(u(i), 1), T) * inv_poch(mono(u(i), 1), N - i + 1, T);
  return sum;
}

TruncatedSeries gf_bdd_durfee(const Params& p, unsigned T) {
  const long j = p.at("j"), N = p.at("N");
  TruncatedSeries sum(T);
  for (long i = j; i <= N && i * i <= T; ++i)
    sum += term(1, mono(u(i * i), u(i)), T) * inv_poch(mono(u(j), 1), i - j + 1, T) *
           poly(q_choose(N, i), T);
  for (long i = 0; i < j && i * j <= T; ++i)
    sum += term(1, mono(u(i * j), u(i)), T) * poly(q_choose(N - j + i, i), T);
  return sum;
}

TruncatedSeries gf_bdd_oracle(const Params& p, unsigned T) {
  ConstraintSet c;
  c.min_part = static_cast<int>(p.at("j"));
  c.max_part = static_cast<int>(p.at("N"));
  return weighted_gf(c, parts_weight(x_pow(1)), T);
}

TruncatedSeries gf_parts_sum(const Params& p, unsigned T) {
  const long j = p.at("j"), N = p.at("N");
  TruncatedSeries sum(T);
  for (long i = j; i <= N && i <= T; ++i) sum += term(1, mono(u(i), u(i)), T) * inv_poch(kQ, i, T);
  return sum;
}

TruncatedSeries gf_parts_oracle(const Params& p, unsigned T) {
  ConstraintSet c;
  c.min_parts = static_cast<int>(p.at("j"));
  c.max_parts = static_cast<int>(p.at("N"));
  return weighted_gf(c, parts_weight(x_pow(1)), T);
}

TruncatedSeries gf_dist_sum(const Params& p, unsigned T) {
  const long j = p.at("j"), N = p.at("N");
  TruncatedSeries sum(T);
  for (long i = j; i <= N && i * (i + 1) / 2 <= T; ++i)
    sum += term(1, mono(u(i * (i + 1) / 2), u(i)), T) * inv_poch(kQ, i, T);
  return sum;
}

TruncatedSeries gf_dist_oracle(const Params& p, unsigned T) {
  ConstraintSet c = ConstraintSet::distinct();
  c.min_parts = static_cast<int>(p.at("j"));
  c.max_parts = static_cast<int>(p.at("N"));
  return weighted_gf(c, parts_weight(x_pow(1)), T);
}

// ------------------------------------------------------ polynomial kinds

enum class Correction { printed, corrected, dropped };

Polynomial thm4_left(long L) {
  const long F1 = floor_div2(L + 1), F0 = floor_div2(L);
  Polynomial out;
  for (long n = 0; n <= F0; ++n)
    for (long k = 0; k <= F0; ++k) {
      Polynomial num = q_pochhammer_poly(2 * (F1 - n - k + 1), 2, n) *
                       q_pochhammer_poly(2 * (F0 - n - k + 1), 2, k);
      if (num.is_zero()) continue;
      num *= q_choose(n + k, k).dilate_q(2);
      Polynomial t = exact_quotient(num, q_pochhammer_poly(2, 2, n + k));
      out += t.times(1, mono(u(nk_degree(n, k)), u(n + k)));
    }
  return out;
}

Polynomial thm4_right(long L, Correction c) {
  Polynomial out;
  for (long n = 0; n <= L + 1; ++n) out += q_choose(L - n + 1, n).times(1, mono(u(n * n), u(n)));
  if (L % 2 == 1 && c != Correction::dropped) {
    const long e = c == Correction::printed ? L : (L + 1) / 2;
    out -= Polynomial::monomial(mono(u(e * e), u(e)));
  }
  return out;
}

struct CorollarySides {
  Polynomial left;
  Polynomial right;
};

// (q^first; q^step)_n contains the factor (1 - q^0).
bool pochhammer_vanishes(long first, long step, long n) {
  return n > 0 && first <= 0 && (-first) % step == 0 && first + (n - 1) * step >= 0;
}

// Both sides times (q^2;q^2)_m. When m > L the Pochhammer ranges can start
// below zero; such a term always carries a vanishing factor in one of its two
// products, and q_pochhammer_poly throws if a surviving one ever does not.
CorollarySides corollary_sides(long L, long m) {
  CorollarySides out;
  for (long k = 0; k <= m; ++k) {
    const long fa = 2 * (floor_div2(L + m) - m + 1), fb = 2 * (floor_div2(L + m - 1) - m + 1);
    if (pochhammer_vanishes(fa, 2, m - k) || pochhammer_vanishes(fb, 2, k)) continue;
    Polynomial a = q_pochhammer_poly(fa, 2, m - k), b = q_pochhammer_poly(fb, 2, k);
    out.left += (a * b * q_choose(m, k).dilate_q(2)).times(1, q_pow(u(k)));
  }
  out.right = q_pochhammer_poly(2, 2, m) * q_choose(L, m);
  return out;
}

// --------------------------------------------------------------- catalog

struct Entry {
  IdentityDescriptor desc;
  std::map<std::string, Builder> sides;
};

Builder constant_oracle(TruncatedSeries (*f)(unsigned)) {
  return [f](const Params&, unsigned T) { return f(T); };
}

Builder pair_builder(PairRelation rel, bool bounded) {
  return [rel, bounded](const Params& p, unsigned T) {
    return pair_side(rel, bounded ? std::optional<long>(p.at("N")) : std::nullopt, T);
  };
}

Builder poly_builder(std::string name, std::string side) {
  return [name, side](const Params& p, unsigned T) {
    return poly(build_polynomial(name, side, p).truncate_q(T), T);
  };
}

std::vector<Entry> make_entries() {
  using K = IdentityKind;
  std::vector<Entry> e;
  auto add = [&](std::string name, K kind, std::vector<ParamSpec> params, std::string anchor,
                 std::string degree, unsigned trunc, std::vector<std::pair<std::string, Builder>> sides) {
    Entry en;
    en.desc.name = std::move(name);
    en.desc.kind = kind;
    en.desc.params = std::move(params);
    en.desc.anchor = std::move(anchor);
    en.desc.term_degree = std::move(degree);
    en.desc.default_trunc = trunc;
    for (auto& [s, b] : sides) {
      en.desc.sides.push_back(s);
      en.sides.emplace(s, std::move(b));
    }
    e.push_back(std::move(en));
  };

  add("ismail_raw", K::series, {},
      "(atq;q)_inf/(q;q)_inf sum_k (-bt)^k q^(k(k+1)/2)/(q,atq;q)_k = "
      "(atq,btq;q)_inf/(q;q)_inf sum_k (-1)^k (abt^2q)^k q^(k(3k-1)/2)/(atq,btq,q;q)_k",
      "k(k+1)/2 | k(3k+1)/2", 20, {{"L", ismail_raw_left}, {"R", ismail_raw_right}});
  add("ismail_simpl", K::series, {},
      "sum_k (bt)^k q^(k(k+1)/2)/(q,atq;q)_k = "
      "sum_m (bt)^m q^(m(m+1)/2) (-btq^(m+1);q)_inf (at)^m q^(m^2)/(q,atq;q)_m",
      "k(k+1)/2 | m(m+1)/2+m^2", 20, {{"L", ismail_simpl_left}, {"R", ismail_simpl_right}});
  add("ismail_lhs_interp", K::enumerative, {},
      "sum_k (bt)^k q^(k(k+1)/2)/(q,atq;q)_k = sum over (pi1,pi2) in D x P with l(pi2) <= nu(pi1) "
      "of t^(nu1+nu2) a^nu2 b^nu1 q^(|pi1|+|pi2|)",
      "k(k+1)/2", 20,
      {{"L", ismail_simpl_left}, {"R", pair_builder(PairRelation::largest_le_nu, false)}});
  add("ismail_rhs_interp", K::enumerative, {},
      "sum_m (bt)^m q^(m(m+1)/2) (-btq^(m+1);q)_inf (at)^m q^(m^2)/(q,atq;q)_m = sum over "
      "(pi1,pi2) in D x P with d(pi2) <= r(pi1) of t^(nu1+nu2) a^nu2 b^nu1 q^(|pi1|+|pi2|)",
      "m(m+1)/2+m^2", 20,
      {{"L", ismail_simpl_right}, {"R", pair_builder(PairRelation::durfee_le_run, false)}});
  add("main_connection", K::series, {},
      "sum_m (bt)^m q^(m(m+1)/2) (-btq^(m+1);q)_inf (at)^m q^(m^2)/(q,atq;q)_m = "
      "sum_m sum_{k>=m} (bt)^k q^(k(k+1)/2)/((q;q)_(k-m)(q;q)_m) (at)^m q^(m^2)/(atq;q)_m = "
      "sum_m sum_{k>=m} (bt)^k q^(k(k+1)/2)/(q;q)_k [k over m]_q (at)^m q^(m^2)/(atq;q)_m",
      "k(k+1)/2+m^2", 20,
      {{"L", ismail_simpl_right}, {"M", main_connection_split}, {"R", main_connection_binomial}});
  add("thm5", K::enumerative, {},
      "sum over D x P with l(pi2) <= nu(pi1) = sum over D x P with d(pi2) <= r(pi1), "
      "weights t^(nu1+nu2) a^nu2 b^nu1 q^(|pi1|+|pi2|)",
      "|pi1|+|pi2|", 12,
      {{"L", pair_builder(PairRelation::largest_le_nu, false)},
       {"R", pair_builder(PairRelation::durfee_le_run, false)}});
  add("thm7", K::enumerative, {{"N", 0, 40, 6}},
      "sum over D_N x P_N with l(pi2) <= nu(pi1) = sum over D_N x P_N with d(pi2) <= r(pi1)",
      "|pi1|+|pi2|", 12,
      {{"L", pair_builder(PairRelation::largest_le_nu, true)},
       {"R", pair_builder(PairRelation::durfee_le_run, true)}});
  add("thmL", K::series, {{"N", 0, 40, 8}},
      "sum_k (bt)^k q^(k(k+1)/2)/(atq;q)_k [N over k]_q = "
      "sum_m (bt)^m q^(m(m+1)/2) (-btq^(m+1);q)_(N-m) (at)^m q^(m^2)/(atq;q)_m [N over m]_q",
      "k(k+1)/2 | m(m+1)/2+m^2", 20, {{"L", thmL_left}, {"R", thmL_right}});
  add("ramanujan_raw", K::series, {},
      "sum_n q^(n^2) (-x)^n/(q;q)_n = (xq^2;q^2)_inf sum_n q^(n^2) (-x)^n/(q^2,xq^2;q^2)_n", "n^2", 30,
      {{"L", [](const Params&, unsigned T) { return rr_sum_side(-1, T); }},
       {"R", ramanujan_raw_right}});
  add("ramanujan", K::series, {},
      "sum_n q^(n^2) x^n/(q;q)_n = sum_n q^(n^2) x^n/(q^2;q^2)_n (-xq^(2n+2);q^2)_inf", "n^2", 30,
      {{"L", [](const Params&, unsigned T) { return rr_sum_side(1, T); }}, {"R", ramanujan_right}});
  add("ramanujan_lhs_interp", K::enumerative, {},
      "sum_n q^(n^2) x^n/(q;q)_n = sum over RR of x^nu q^|pi|", "n^2", 20,
      {{"L", [](const Params&, unsigned T) { return rr_sum_side(1, T); }},
       {"R", constant_oracle(rr_oracle)}});
  add("ramanujan_rhs_interp", K::enumerative, {},
      "sum_n q^(n^2) x^n/(q^2;q^2)_n (-xq^(2n+2);q^2)_inf = sum over D with s_e > 2 nu_o of "
      "x^nu q^|pi|",
      "n^2", 20, {{"L", ramanujan_right}, {"R", constant_oracle(distinct_even_oracle)}});
  add("thm3", K::enumerative, {},
      "sum over RR of x^nu q^|pi| = sum over D with s_e > 2 nu_o of x^nu q^|pi|", "|pi|", 25,
      {{"L", constant_oracle(rr_oracle)}, {"R", constant_oracle(distinct_even_oracle)}});
  add("dist_even", K::series, {{"n", 0, 40, 2}},
      "(-xq^(2n+2);q^2)_inf = sum_k x^k q^(2nk+k(k+1))/(q^2;q^2)_k", "2nk+k(k+1)", 24,
      {{"L", dist_even_product}, {"R", dist_even_sum}});
  add("nk_repr", K::series, {},
      "sum_n sum_k q^(n^2+2nk+k(k+1)) x^(n+k)/((q^2;q^2)_n (q^2;q^2)_k) = "
      "sum_n sum_k q^(n^2+2nk+k(k+1)) x^(n+k)/(q^2;q^2)_(n+k) [n+k over k]_(q^2)",
      "n^2+2nk+k(k+1)", 25, {{"L", nk_split}, {"R", nk_binomial}});
  add("rr_last", K::enumerative, {},
      "sum_n sum_k q^(n^2+2nk+k(k+1)) x^(n+k)/(q^2;q^2)_(n+k) [n+k over k]_(q^2) = "
      "sum over RR of x^nu q^|pi|",
      "n^2+2nk+k(k+1)", 25, {{"L", nk_binomial}, {"R", constant_oracle(rr_oracle)}});
  add("thm4", K::polynomial, {{"L", 0, 30, 7}},
      "sum_{n,k=0}^{floor(L/2)} q^(n^2+2nk+k(k+1)) x^(n+k)/(q^2;q^2)_(n+k) [n+k over k]_(q^2) "
      "(q^(2(floor((L+1)/2)-n-k+1));q^2)_n (q^(2(floor(L/2)-n-k+1));q^2)_k = "
      "((-1)^L-1)/2 q^(L^2) x^L + sum_{n=0}^{L+1} q^(n^2) x^n [L-n+1 over n]_q",
      "finite", 0, {{"L", poly_builder("thm4", "L")}, {"R", poly_builder("thm4", "R")}});
  add("thm4_corrected", K::polynomial, {{"L", 0, 30, 7}},
      "left side of thm4 = ((-1)^L-1)/2 q^(A^2) x^A + sum_{n=0}^{L+1} q^(n^2) x^n "
      "[L-n+1 over n]_q, A = ceil(L/2)",
      "finite", 0,
      {{"L", poly_builder("thm4_corrected", "L")}, {"R", poly_builder("thm4_corrected", "R")}});
  add("corollary", K::polynomial, {{"L", 0, 24, 4}, {"m", 0, 24, 2}},
      "sum_k q^k (q^(2(floor((L+m)/2)-m+1));q^2)_(m-k) (q^(2(floor((L+m-1)/2)-m+1));q^2)_k "
      "[m over k]_(q^2) = (q^2;q^2)_m [L over m]_q",
      "finite", 0, {{"L", poly_builder("corollary", "L")}, {"R", poly_builder("corollary", "R")}});
  add("gf_bdd", K::series, {{"j", 1, 40, 1}, {"N", 1, 40, 6}},
      "1/(xq^j;q)_(N-j+1) = 1 + sum_{i=j}^N xq^i/(xq^i;q)_(N-i+1) = "
      "sum_{i=j}^N x^i q^(i^2)/(xq^j;q)_(i-j+1) [N over i]_q + sum_{i=0}^{j-1} x^i q^(ij) "
      "[N-j+i over i]_q",
      "i | i^2 | ij", 20, {{"L", gf_bdd_product}, {"M", gf_bdd_smallest}, {"R", gf_bdd_durfee}});
  add("gf_parts", K::enumerative, {{"j", 0, 40, 1}, {"N", 0, 40, 6}},
      "sum_{i=j}^N x^i q^i/(q;q)_i = sum over partitions with j..N parts of x^nu q^|pi|", "i", 20,
      {{"L", gf_parts_sum}, {"R", gf_parts_oracle}});
  add("gf_dist", K::enumerative, {{"j", 0, 40, 1}, {"N", 0, 40, 6}},
      "sum_{i=j}^N x^i q^(i(i+1)/2)/(q;q)_i = sum over distinct partitions with j..N parts of "
      "x^nu q^|pi|",
      "i(i+1)/2", 20, {{"L", gf_dist_sum}, {"R", gf_dist_oracle}});
  return e;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = make_entries();
  return e;
}

const Entry& entry(std::string_view name) {
  for (const auto& en : entries())
    if (en.desc.name == name) return en;
  throw UsageError("unknown identity '" + std::string(name) + "'");
}

void check_trunc(unsigned T) {
  if (T > kMaxTrunc)
    throw UsageError("truncation order " + std::to_string(T) + " exceeds " +
                     std::to_string(kMaxTrunc));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Compares the sides pairwise in order and records the first difference.
void compare_chain(VerificationReport& r, const std::vector<std::string>& names,
                   const std::vector<TruncatedSeries>& sides) {
  r.pass = true;
  for (std::size_t i = 1; i < sides.size(); ++i) {
    auto cmp = series_equal(sides[i - 1], sides[i]);
    if (!cmp.equal) {
      r.pass = false;
      r.witness = Witness{cmp.witness->mono, cmp.witness->lhs, cmp.witness->rhs, names[i - 1], names[i]};
      return;
    }
  }
}

}  // namespace

std::string_view kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::series: return "series";
    case IdentityKind::polynomial: return "polynomial";
    case IdentityKind::enumerative: return "enumerative";
  }
  return "?";
}

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> c = [] {
    std::vector<IdentityDescriptor> out;
    for (const auto& en : entries()) out.push_back(en.desc);
    return out;
  }();
  return c;
}

const IdentityDescriptor& describe(std::string_view name) { return entry(name).desc; }

Params resolve_params(const IdentityDescriptor& d, const Params& given) {
  Params out;
  for (const auto& [key, value] : given) {
    const bool known = std::any_of(d.params.begin(), d.params.end(),
                                   [&](const ParamSpec& s) { return s.name == key; });
    if (!known) throw UsageError(d.name + " takes no parameter '" + key + "'");
  }
  for (const auto& spec : d.params) {
    auto it = given.find(spec.name);
    const long v = it == given.end() ? spec.fallback : it->second;
    if (v < spec.min || v > spec.max)
      throw UsageError(d.name + ": parameter " + spec.name + "=" + std::to_string(v) +
                       " outside [" + std::to_string(spec.min) + ", " + std::to_string(spec.max) + "]");
    out[spec.name] = v;
  }
  if (out.count("j") && out.count("N") && out["j"] > out["N"])
    throw UsageError(d.name + ": requires j <= N");
  return out;
}

TruncatedSeries build(std::string_view name, std::string_view side, const Params& params,
                      unsigned trunc) {
  check_trunc(trunc);
  const Entry& en = entry(name);
  auto it = en.sides.find(std::string(side));
  if (it == en.sides.end())
    throw UsageError(std::string(name) + " has no side '" + std::string(side) + "'");
  return it->second(resolve_params(en.desc, params), trunc);
}

Polynomial build_polynomial(std::string_view name, std::string_view side, const Params& params) {
  const Entry& en = entry(name);
  if (en.desc.kind != IdentityKind::polynomial)
    throw UsageError(std::string(name) + " is not a polynomial identity");
  if (side != "L" && side != "R")
    throw UsageError(std::string(name) + " has no side '" + std::string(side) + "'");
  const Params p = resolve_params(en.desc, params);
  if (name == "corollary") {
    auto s = corollary_sides(p.at("L"), p.at("m"));
    return side == "L" ? s.left : s.right;
  }
  const long L = p.at("L");
  if (side == "L") return thm4_left(L);
  return thm4_right(L, name == "thm4" ? Correction::printed : Correction::corrected);
}

VerificationReport verify(std::string_view name, const Params& params, unsigned trunc,
                          const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Entry& en = entry(name);
  VerificationReport r;
  r.name = en.desc.name;
  r.params = resolve_params(en.desc, params);
  if (en.desc.kind == IdentityKind::polynomial) {
    Polynomial lhs = build_polynomial(name, "L", r.params), rhs;
    if (name == "corollary") {
      auto s = corollary_sides(r.params.at("L"), r.params.at("m"));
      rhs = s.right;
      r.notes.push_back("both sides multiplied by (q^2;q^2)_m");
    } else if (options.drop_thm4_correction) {
      rhs = thm4_right(r.params.at("L"), Correction::dropped);
      r.notes.push_back("mutation: correction term dropped");
    } else {
      rhs = build_polynomial(name, "R", r.params);
    }
    auto cmp = polynomial_equal(lhs, rhs);
    r.pass = cmp.equal;
    if (!cmp.equal) r.witness = Witness{cmp.witness->mono, cmp.witness->lhs, cmp.witness->rhs, "L", "R"};
  } else {
    check_trunc(trunc);
    r.trunc = trunc;
    std::vector<TruncatedSeries> sides;
    for (const auto& s : en.desc.sides) sides.push_back(en.sides.at(s)(r.params, trunc));
    compare_chain(r, en.desc.sides, sides);
  }
  r.seconds = seconds_since(start);
  return r;
}

PairMembership pair_membership(const Partition& first, const Partition& second,
                               std::optional<int> bound) {
  const bool in_domain = has_gap(first, 1) && (!bound || (first.largest() <= *bound &&
                                                          second.largest() <= *bound));
  if (!in_domain) return {};
  return {relation_holds(PairRelation::largest_le_nu, first, second),
          relation_holds(PairRelation::durfee_le_run, first, second)};
}

VerificationReport oracle_check(std::string_view name, const Params& params, unsigned trunc) {
  check_trunc(trunc);
  const auto start = std::chrono::steady_clock::now();
  const Entry& en = entry(name);
  VerificationReport r;
  r.name = en.desc.name;
  r.params = resolve_params(en.desc, params);
  r.trunc = trunc;
  auto side = [&](const std::string& s) { return en.sides.at(s)(r.params, trunc); };

  if (name == "gf_bdd") {
    auto oracle = gf_bdd_oracle(r.params, trunc);
    compare_chain(r, {"L", "M", "R", "enumeration"}, {side("L"), side("M"), side("R"), oracle});
  } else if (name == "thm7") {
    // The pair sums against the series of the bounded identity.
    Params np{{"N", r.params.at("N")}};
    compare_chain(r, {"thmL:L", "L", "R", "thmL:R"},
                  {thmL_left(np, trunc), side("L"), side("R"), thmL_right(np, trunc)});
  } else if (name == "thm5") {
    compare_chain(r, {"L", "R"}, {side("L"), side("R")});
    for (const auto& [p1, p2] : std::vector<PartitionPair>{{{3, 2}, {2, 1}}, {{2, 1}, {3, 2}}}) {
      if (p1.size() + p2.size() > static_cast<int>(trunc)) continue;
      auto m = pair_membership(p1, p2);
      r.notes.push_back("(" + p1.to_string() + "," + p2.to_string() + ") counted by " +
                        (m.left && m.right ? "both sides" : m.left ? "left side only" :
                         m.right ? "right side only" : "neither side"));
    }
  } else if (en.desc.kind == IdentityKind::enumerative) {
    std::vector<TruncatedSeries> sides;
    for (const auto& s : en.desc.sides) sides.push_back(side(s));
    compare_chain(r, en.desc.sides, sides);
  } else {
    throw UsageError(std::string(name) + " has no enumeration oracle");
  }
  r.seconds = seconds_since(start);
  return r;
}

VerificationReport corollary_check(long L, long m) {
  return verify("corollary", {{"L", L}, {"m", m}}, 0);
}

}  // namespace qpart
