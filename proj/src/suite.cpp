#include "qpart/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "qpart/bijections.hpp"
#include "qpart/qbinomial.hpp"

namespace qpart {

namespace {

constexpr std::size_t kMaxFailures = 8;

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return out;
}

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    r_.pass = false;
    if (r_.failures.size() < kMaxFailures) r_.failures.push_back(what);
  }

  void report(const VerificationReport& v, const std::string& label = {}) {
    std::string what = label.empty() ? v.name : label;
    if (!v.params.empty()) what += " " + params_text(v.params);
    if (v.trunc) what += " T=" + std::to_string(*v.trunc);
    if (v.witness)
      what += ": " + v.witness->lhs_side + " and " + v.witness->rhs_side + " differ at " +
              v.witness->mono.to_string() + " (" + v.witness->lhs.get_str() + " vs " +
              v.witness->rhs.get_str() + ")";
    expect(v.pass, what);
    if (!v.pass && v.witness && !r_.witness) r_.witness = CriterionWitness{v.name, v.params, *v.witness};
  }

  void series(const TruncatedSeries& a, const TruncatedSeries& b, const std::string& what) {
    auto cmp = series_equal(a, b);
    std::string text = what;
    if (!cmp.equal)
      text += ": differ at " + cmp.witness->mono.to_string() + " (" + cmp.witness->lhs.get_str() +
              " vs " + cmp.witness->rhs.get_str() + ")";
    expect(cmp.equal, text);
  }

 private:
  CriterionResult& r_;
};

struct Scale {
  bool full;
  long pick(long quick, long full_value) const { return full ? full_value : quick; }
  unsigned T(unsigned quick, unsigned full_value) const { return full ? full_value : quick; }
};

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void timed_report(Checker& c, std::string_view name, unsigned T, double limit) {
  auto r = verify(name, {}, T);
  c.report(r);
  std::ostringstream what;
  what << name << " runtime under " << limit << " s";
  c.expect(r.seconds < limit, what.str());
}

void c1(Checker& c, Scale s) { timed_report(c, "ismail_raw", s.T(12, 20), 10.0); }

void c2(Checker& c, Scale s) {
  const unsigned T = s.T(12, 20);
  for (const char* n : {"ismail_simpl", "ismail_lhs_interp", "main_connection", "ismail_rhs_interp"})
    c.report(verify(n, {}, T));
  c.series(build("ismail_lhs_interp", "L", {}, T), build("main_connection", "R", {}, T),
           "ismail_lhs_interp L = main_connection R");
  c.series(build("main_connection", "L", {}, T), build("ismail_rhs_interp", "L", {}, T),
           "main_connection L = ismail_rhs_interp L");
}

void c3(Checker& c, Scale s) {
  timed_report(c, "ramanujan_raw", s.T(20, 30), 10.0);
  timed_report(c, "ramanujan", s.T(20, 30), 10.0);
}

void c4(Checker& c, Scale s) {
  ConstraintSet rr = ConstraintSet::rr(), de = ConstraintSet::distinct();
  de.smallest_even_exceeds_twice_odd = true;
  const int top = static_cast<int>(s.pick(18, 25));
  for (int n = 0; n <= top; ++n) {
    std::map<int, long> left, right;
    for (const auto& p : enumerate(n, rr)) ++left[p.length()];
    for (const auto& p : enumerate(n, de)) ++right[p.length()];
    c.expect(left == right, "part-count distribution differs at n=" + std::to_string(n));
  }
  rr.exact_parts = 3;
  de.exact_parts = 3;
  const std::vector<Partition> gap_two{{11, 3, 1}, {10, 4, 1}, {9, 5, 1}, {9, 4, 2},
                                          {8, 6, 1},  {8, 5, 2},  {7, 5, 3}};
  const std::vector<Partition> distinct_even{{11, 3, 1}, {10, 4, 1}, {9, 5, 1}, {8, 6, 1},
                                           {8, 4, 3},  {7, 5, 3},  {6, 5, 4}};
  c.expect(enumerate(15, rr) == gap_two, "gap-2 partitions of 15 into 3 parts");
  c.expect(enumerate(15, de) == distinct_even, "distinct partitions of 15 into 3 parts with s_e > 2nu_o");
}

void c5(Checker& c, Scale s, bool mutate) {
  VerifyOptions opt;
  opt.drop_thm4_correction = mutate;
  for (long L = 0; L <= s.pick(8, 12); ++L) c.report(verify("thm4", {{"L", L}}, 0, opt));
  // The odd-L term has to matter: dropping it must break L = 1.
  VerifyOptions drop;
  drop.drop_thm4_correction = true;
  c.expect(!verify("thm4", {{"L", 1}}, 0, drop).pass, "thm4 L=1 fails without its correction term");
}

void c6(Checker& c, Scale s) {
  const long top = s.pick(8, 12);
  for (long L = 0; L <= top; ++L)
    for (long m = 0; m <= top; ++m) c.report(corollary_check(L, m));
}

void c7(Checker& c, Scale s) {
  c.report(oracle_check("thm5", {}, s.T(10, 12)));
  auto a = pair_membership(Partition{3, 2}, Partition{2, 1});
  auto b = pair_membership(Partition{2, 1}, Partition{3, 2});
  c.expect(a.left != a.right, "((3,2),(2,1)) is counted by exactly one side");
  c.expect(b.left != b.right, "((2,1),(3,2)) is counted by exactly one side");
}

void c8(Checker& c, Scale s) {
  for (long N = 0; N <= s.pick(5, 8); ++N) c.report(verify("thmL", {{"N", N}}, s.T(14, 20)));
}

void c9(Checker& c, Scale s) {
  for (long N = 0; N <= s.pick(4, 6); ++N) c.report(oracle_check("thm7", {{"N", N}}, s.T(10, 12)));
}

void c10(Checker& c, Scale s, std::uint64_t seed) {
  const int top = static_cast<int>(s.pick(20, 30));
  for (int n = 0; n <= top; ++n)
    for (const auto& p : enumerate(n, ConstraintSet::rr())) {
      auto d = rr_decompose(p);
      c.expect(rr_compose(d.vector, d.evencols) == p, "rr round trip " + p.to_string());
    }

  // Minimal partitions built directly: smallest part 1 or 2, gaps 2 or 3.
  const int M_top = static_cast<int>(s.pick(6, 8));
  std::map<std::pair<int, int>, long> counts;
  std::map<std::pair<int, int>, Polynomial> gf;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& asc) {
    std::vector<int> desc(asc.rbegin(), asc.rend());
    Partition p(desc);
    if (is_minimal(p)) {
      const int odd = odd_count(p);
      std::pair<int, int> key{odd, p.length() - odd};
      ++counts[key];
      gf[key] += Polynomial::monomial(q_pow(static_cast<unsigned>(p.size())));
    }
    if (static_cast<int>(asc.size()) == M_top) return;
    for (int step : {2, 3}) {
      asc.push_back(asc.empty() ? step - 1 : asc.back() + step);
      grow(asc);
      asc.pop_back();
    }
  };
  std::vector<int> start;
  grow(start);
  for (int M = 0; M <= M_top; ++M)
    for (int n = 0; n <= M; ++n) {
      const int k = M - n;
      const std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      long c_mn = 1;
      for (int i = 1; i <= n; ++i) c_mn = c_mn * (k + i) / i;
      c.expect(counts[{n, k}] == c_mn, "minimal partition count" + tag);
      const auto lead = static_cast<unsigned>(n * n + 2 * n * k + k * (k + 1));
      c.expect(gf[{n, k}] == q_choose(M, k).dilate_q(2).times(1, q_pow(lead)),
               "minimal partition generating function" + tag);
    }

  c.report(verify("rr_last", {}, s.T(18, 25)));

  const Partition base{7, 5, 3, 1}, mu{5, 2, 2}, joined{12, 7, 5, 1};
  c.expect(column_insert(base, mu) == joined, "column_insert((7,5,3,1),(5,2,2)) = (12,7,5,1)");
  auto back = column_extract(joined, 4, 2);
  c.expect(back.base == base && back.mu == mu, "column_extract((12,7,5,1)) gives back both pieces");

  // Seeded compose-then-decompose on random inputs.
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < static_cast<int>(s.pick(50, 200)); ++trial) {
    const int M = static_cast<int>(rng() % 7);
    std::vector<int> e(static_cast<std::size_t>(M));
    for (int& v : e) v = 1 + static_cast<int>(rng() % 2);
    std::vector<int> cols;
    const int ncols = M ? static_cast<int>(rng() % 4) : 0;
    for (int i = 0; i < ncols; ++i) cols.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(M)));
    std::sort(cols.rbegin(), cols.rend());
    ParityVector v(e);
    Partition evencols(cols);
    auto d = rr_decompose(rr_compose(v, evencols));
    c.expect(d.vector == v && d.evencols == evencols,
             "compose/decompose " + v.to_string() + " " + evencols.to_string());
  }
}

void c11(Checker& c, Scale s) {
  const long top = s.pick(4, 6);
  const unsigned T = s.T(14, 20);
  for (long N = 1; N <= top; ++N)
    for (long j = 1; j <= N; ++j) c.report(verify("gf_bdd", {{"j", j}, {"N", N}}, T));
  for (long N = 0; N <= top; ++N)
    for (long j = 0; j <= N; ++j) c.report(oracle_check("gf_dist", {{"j", j}, {"N", N}}, T));
}

void c12(Checker& c, Scale s) {
  const long top = s.pick(3, 5);
  const unsigned T = s.T(16, 24);
  for (long n = 0; n <= top; ++n) c.report(verify("dist_even", {{"n", n}}, T));
  for (int n = 0; n <= top; ++n) {
    ConstraintSet even = ConstraintSet::distinct();
    even.parity = Parity::even;
    even.min_part = 2 * n + 2;
    for (int size = 0; size <= static_cast<int>(T); ++size)
      for (const auto& p : enumerate(size, even))
        c.expect(even_insert(even_extract(p, n), p.length(), n) == p,
                 "even round trip " + p.to_string() + " n=" + std::to_string(n));
  }
}

bool same_outcome(const CriterionResult& a, const CriterionResult& b) {
  return a.id == b.id && a.pass == b.pass && a.checks == b.checks && a.failures == b.failures &&
         a.witness.has_value() == b.witness.has_value();
}

void c13(Checker& c, const SuiteOptions& outer) {
  // Quick profile twice, one thread against several; outcomes must agree.
  SuiteOptions o;
  o.profile = Profile::quick;
  o.seed = outer.seed;
  o.mutate_thm4 = outer.mutate_thm4;
  for (int id = 1; id <= 12; ++id) o.only.push_back(id);
  o.threads = 1;
  auto first = run_suite(o);
  o.threads = std::max(2u, outer.threads);
  auto second = run_suite(o);
  c.expect(first.criteria.size() == second.criteria.size(), "same number of criteria");
  for (std::size_t i = 0; i < std::min(first.criteria.size(), second.criteria.size()); ++i)
    c.expect(same_outcome(first.criteria[i], second.criteria[i]),
             "criterion " + std::to_string(first.criteria[i].id) + " repeats identically");
}

const std::vector<std::pair<int, std::string>> kTitles = {
    {1, "ismail_raw, both sides at T=20"},
    {2, "ismail_lhs_interp = main_connection = ismail_rhs_interp"},
    {3, "ramanujan_raw and ramanujan at T=30"},
    {4, "Gap-2 and distinct s_e > 2nu_o partitions equinumerous by part count"},
    {5, "Polynomial identity thm4 for L in 0..12"},
    {6, "corollary for L, m <= 12"},
    {7, "Pair identity with l(pi2) <= nu(pi1) vs d(pi2) <= r(pi1)"},
    {8, "Bounded identity thmL for N in 0..8"},
    {9, "Bounded pair identity for N in 0..6"},
    {10, "Minimal partitions, 2-columns and column insertion"},
    {11, "Bounded generating functions"},
    {12, "Distinct even parts above 2n"},
    {13, "Deterministic suite outcomes"},
};

CriterionResult run_one(int id, const SuiteOptions& o) {
  CriterionResult r;
  r.id = id;
  r.title = kTitles[static_cast<std::size_t>(id - 1)].second;
  const auto start = std::chrono::steady_clock::now();
  Checker c(r);
  const Scale s{o.profile == Profile::full};
  try {
    switch (id) {
      case 1: c1(c, s); break;
      case 2: c2(c, s); break;
      case 3: c3(c, s); break;
      case 4: c4(c, s); break;
      case 5: c5(c, s, o.mutate_thm4); break;
      case 6: c6(c, s); break;
      case 7: c7(c, s); break;
      case 8: c8(c, s); break;
      case 9: c9(c, s); break;
      case 10: c10(c, s, o.seed); break;
      case 11: c11(c, s); break;
      case 12: c12(c, s); break;
      case 13: c13(c, o); break;
    }
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = elapsed(start);
  return r;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

std::string_view profile_name(Profile p) { return p == Profile::full ? "full" : "quick"; }

Profile parse_profile(std::string_view name) {
  if (name == "quick") return Profile::quick;
  if (name == "full") return Profile::full;
  throw UsageError("unknown suite profile '" + std::string(name) + "'");
}

std::vector<std::pair<int, std::string>> suite_criteria() { return kTitles; }

SuiteReport run_suite(const SuiteOptions& options) {
  std::vector<int> ids;
  if (!options.empty_catalog) {
    if (options.only.empty())
      for (const auto& [id, title] : kTitles) ids.push_back(id);
    for (int id : options.only) {
      if (id < 1 || id > static_cast<int>(kTitles.size()))
        throw UsageError("no criterion " + std::to_string(id));
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  if (ids.empty()) throw UsageError("nothing to verify");

  SuiteReport report;
  report.profile = options.profile;
  report.seed = options.seed;
  report.criteria.resize(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) report.criteria[i] = run_one(ids[i], options);
  };
  const unsigned n = std::clamp(options.threads, 1u, static_cast<unsigned>(ids.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace qpart
