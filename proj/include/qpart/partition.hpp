#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

// Non-increasing finite sequence of positive integers; empty allowed.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Parses "(11,3,1)" or "()". Whitespace around tokens is allowed;
  // non-descending input is rejected.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  // i-th part (0-based) or 0 past the end.
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int size() const { return size_; }  // |pi|
  int length() const { return static_cast<int>(parts_.size()); }  // nu(pi)
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the parts.
  friend auto operator<=>(const Partition& l, const Partition& r) { return l.parts_ <=> r.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Smallest even part, or infinity when there is none.
class SmallestEven {
 public:
  static SmallestEven infinity() { return SmallestEven{}; }
  static SmallestEven of(int value) { return SmallestEven{value}; }

  bool is_infinity() const { return !value_; }
  int value() const { return value_.value(); }
  // s_e > bound, with infinity exceeding every integer.
  bool exceeds(int bound) const { return !value_ || *value_ > bound; }

  friend bool operator==(const SmallestEven&, const SmallestEven&) = default;
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

 private:
  SmallestEven() = default;
  explicit SmallestEven(int v) : value_(v) {}
  std::optional<int> value_;
};

struct PartitionStats {
  int nu = 0;
  int nu_odd = 0;
  int largest = 0;
  SmallestEven smallest_even = SmallestEven::infinity();
  int durfee = 0;
  int run = 0;  // r: largest r with 1, 2, ..., r all parts
};

PartitionStats stats(const Partition& p);
int durfee(const Partition& p);
int run_length(const Partition& p);
int odd_count(const Partition& p);
SmallestEven smallest_even(const Partition& p);
Partition conjugate(const Partition& p);
// Consecutive parts differ by at least gap (gap 0: any partition).
bool has_gap(const Partition& p, int gap);

enum class Parity { any, odd, even };

struct ConstraintSet {
  int min_gap = 0;  // 1: distinct (D), 2: Rogers-Ramanujan gap (RR)
  int min_part = 1;
  std::optional<int> max_part;
  std::optional<int> exact_parts;
  std::optional<int> min_parts;
  std::optional<int> max_parts;
  Parity parity = Parity::any;
  // Post-filter s_e(pi) > 2 nu_o(pi).
  bool smallest_even_exceeds_twice_odd = false;

  static ConstraintSet unrestricted() { return {}; }
  static ConstraintSet distinct() { return with_gap(1); }
  static ConstraintSet rr() { return with_gap(2); }
  static ConstraintSet with_gap(int g) {
    ConstraintSet c;
    c.min_gap = g;
    return c;
  }

  bool admits(const Partition& p) const;
};

// Partitions of n admitted by c, in descending lexicographic order.
std::vector<Partition> enumerate(int n, const ConstraintSet& c);
void for_each_partition(int n, const ConstraintSet& c,
                        const std::function<void(const Partition&)>& visit);

// Monomial attached to a partition: per_part^nu * per_odd^nu_o *
// per_even^(nu - nu_o) * per_durfee^d.
struct WeightSpec {
  Monomial per_part;
  Monomial per_odd_part;
  Monomial per_even_part;
  Monomial per_durfee;

  static WeightSpec counting_parts(Monomial m) {
    WeightSpec w;
    w.per_part = m;
    return w;
  }
  Monomial weight(const Partition& p) const;
};

// sum over admitted partitions of size <= T of weight(pi) q^|pi|.
TruncatedSeries weighted_gf(const ConstraintSet& c, const WeightSpec& w, unsigned trunc);

enum class PairRelation { none, largest_le_nu, durfee_le_run };

std::string_view relation_name(PairRelation r);
bool relation_holds(PairRelation r, const Partition& first, const Partition& second);

using PartitionPair = std::pair<Partition, Partition>;

// All (pi1, pi2) with pi1 in c1, pi2 in c2, |pi1| + |pi2| <= T and the relation;
// ordered by total size, then pi1 size, then descending lex in each slot.
std::vector<PartitionPair> enumerate_pairs(const ConstraintSet& c1, const ConstraintSet& c2,
                                           PairRelation relation, unsigned trunc);

TruncatedSeries weighted_pair_gf(const ConstraintSet& c1, const ConstraintSet& c2,
                                 PairRelation relation, const WeightSpec& w1,
                                 const WeightSpec& w2, unsigned trunc);

}  // namespace qpart
