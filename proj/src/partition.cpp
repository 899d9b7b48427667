#include "qpart/partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive, got " +
                                  std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing: " +
                                  std::to_string(parts_[i - 1]) + " before " +
                                  std::to_string(parts_[i]));
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed partition literal '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') throw fail("expected '('");
  ++i;
  skip_ws();
  std::vector<int> parts;
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i) throw fail("expected an integer");
      i = static_cast<std::size_t>(ptr - text.data());
      if (value <= 0) throw fail("parts must be positive");
      if (!parts.empty() && value > parts.back()) throw fail("parts must be non-increasing");
      parts.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw fail("expected ',' or ')'");
    }
  }
  skip_ws();
  if (i != text.size()) throw fail("trailing characters");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

int durfee(const Partition& p) {
  int d = 0;
  while (d < p.length() && p[d] >= d + 1) ++d;
  return d;
}

int run_length(const Partition& p) {
  int r = 0;
  // Parts ascend from the back; a repeated part does not break the run.
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
    if (*it == r + 1) ++r;
    else if (*it > r + 1) break;
  }
  return r;
}

int odd_count(const Partition& p) {
  return static_cast<int>(
      std::count_if(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 1; }));
}

SmallestEven smallest_even(const Partition& p) {
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it)
    if (*it % 2 == 0) return SmallestEven::of(*it);
  return SmallestEven::infinity();
}

PartitionStats stats(const Partition& p) {
  PartitionStats s;
  s.nu = p.length();
  s.nu_odd = odd_count(p);
  s.largest = p.largest();
  s.smallest_even = smallest_even(p);
  s.durfee = durfee(p);
  s.run = run_length(p);
  return s;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool has_gap(const Partition& p, int gap) {
  for (int i = 1; i < p.length(); ++i)
    if (p[i - 1] - p[i] < gap) return false;
  return true;
}

bool ConstraintSet::admits(const Partition& p) const {
  if (!has_gap(p, min_gap)) return false;
  if (!p.empty() && p.smallest() < min_part) return false;
  if (max_part && p.largest() > *max_part) return false;
  if (exact_parts && p.length() != *exact_parts) return false;
  if (min_parts && p.length() < *min_parts) return false;
  if (max_parts && p.length() > *max_parts) return false;
  for (int v : p.parts()) {
    if (parity == Parity::odd && v % 2 == 0) return false;
    if (parity == Parity::even && v % 2 == 1) return false;
  }
  if (smallest_even_exceeds_twice_odd && !smallest_even(p).exceeds(2 * odd_count(p)))
    return false;
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const ConstraintSet& c, const std::function<void(const Partition&)>& visit)
      : c_(c), visit_(visit) {
    if (c_.exact_parts) cap_ = *c_.exact_parts;
    if (c_.max_parts) cap_ = std::min(cap_, *c_.max_parts);
  }

  void run(int n) {
    if (n < 0) return;
    const int top = c_.max_part ? std::min(n, *c_.max_part) : n;
    recurse(n, top);
  }

 private:
  bool parity_ok(int v) const {
    return c_.parity == Parity::any || (c_.parity == Parity::odd) == (v % 2 == 1);
  }

  // Whether `remaining` can be split into exactly `count` more parts, each
  // <= top, respecting the gap (parity ignored, so this only prunes).
  bool feasible(int remaining, int top, int count) const {
    const long g = c_.min_gap;
    const long lo = static_cast<long>(count) * c_.min_part + g * count * (count - 1) / 2;
    const long hi = static_cast<long>(count) * top - g * count * (count - 1) / 2;
    return remaining >= lo && remaining <= hi;
  }

  void recurse(int remaining, int top) {
    const int have = static_cast<int>(current_.size());
    if (remaining == 0) {
      Partition p(current_);
      if (c_.admits(p)) visit_(p);
      return;
    }
    if (have >= cap_) return;
    if (c_.exact_parts && !feasible(remaining, top, *c_.exact_parts - have)) return;
    for (int part = std::min(remaining, top); part >= c_.min_part; --part) {
      if (!parity_ok(part)) continue;
      current_.push_back(part);
      recurse(remaining - part, part - c_.min_gap);
      current_.pop_back();
    }
  }

  const ConstraintSet& c_;
  const std::function<void(const Partition&)>& visit_;
  int cap_ = std::numeric_limits<int>::max();
  std::vector<int> current_;
};

}  // namespace

void for_each_partition(int n, const ConstraintSet& c,
                        const std::function<void(const Partition&)>& visit) {
  Enumerator(c, visit).run(n);
}

std::vector<Partition> enumerate(int n, const ConstraintSet& c) {
  std::vector<Partition> out;
  for_each_partition(n, c, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Monomial WeightSpec::weight(const Partition& p) const {
  const int odd = odd_count(p);
  const auto nu = static_cast<unsigned>(p.length());
  return per_part.pow(nu) * per_odd_part.pow(static_cast<unsigned>(odd)) *
         per_even_part.pow(nu - static_cast<unsigned>(odd)) *
         per_durfee.pow(static_cast<unsigned>(durfee(p)));
}

TruncatedSeries weighted_gf(const ConstraintSet& c, const WeightSpec& w, unsigned trunc) {
  std::vector<Term> terms;
  for (unsigned n = 0; n <= trunc; ++n) {
    for_each_partition(static_cast<int>(n), c, [&](const Partition& p) {
      terms.push_back({1, w.weight(p) * q_pow(n)});
    });
  }
  return TruncatedSeries::from_polynomial(Polynomial::from_terms(std::move(terms)), trunc);
}

std::string_view relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::none: return "none";
    case PairRelation::largest_le_nu: return "largest_le_nu";
    case PairRelation::durfee_le_run: return "durfee_le_run";
  }
  return "?";
}

bool relation_holds(PairRelation r, const Partition& first, const Partition& second) {
  switch (r) {
    case PairRelation::none: return true;
    case PairRelation::largest_le_nu: return second.largest() <= first.length();
    case PairRelation::durfee_le_run: return durfee(second) <= run_length(first);
  }
  return false;
}

std::vector<PartitionPair> enumerate_pairs(const ConstraintSet& c1, const ConstraintSet& c2,
                                           PairRelation relation, unsigned trunc) {
  std::vector<std::vector<Partition>> firsts(trunc + 1), seconds(trunc + 1);
  for (unsigned n = 0; n <= trunc; ++n) {
    firsts[n] = enumerate(static_cast<int>(n), c1);
    seconds[n] = enumerate(static_cast<int>(n), c2);
  }
  std::vector<PartitionPair> out;
  for (unsigned total = 0; total <= trunc; ++total)
    for (unsigned s1 = 0; s1 <= total; ++s1)
      for (const auto& p1 : firsts[s1])
        for (const auto& p2 : seconds[total - s1])
          if (relation_holds(relation, p1, p2)) out.emplace_back(p1, p2);
  return out;
}

TruncatedSeries weighted_pair_gf(const ConstraintSet& c1, const ConstraintSet& c2,
                                 PairRelation relation, const WeightSpec& w1,
                                 const WeightSpec& w2, unsigned trunc) {
  std::vector<Term> terms;
  for (const auto& [p1, p2] : enumerate_pairs(c1, c2, relation, trunc))
    terms.push_back({1, w1.weight(p1) * w2.weight(p2) *
                            q_pow(static_cast<unsigned>(p1.size() + p2.size()))});
  return TruncatedSeries::from_polynomial(Polynomial::from_terms(std::move(terms)), trunc);
}

}  // namespace qpart
