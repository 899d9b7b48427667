#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

// End-of-row values (1 or 2) of a minimal RR partition's 2-modular diagram,
// read from the bottom row up. n = number of 1s (odd parts), k = number of 2s.
class ParityVector {
 public:
  ParityVector() = default;
  explicit ParityVector(std::vector<int> entries);  // entries must be 1 or 2
  static ParityVector parse(std::string_view text);  // "(1,1,2,2)" or "1122"
  // n ones followed by k twos: the vector of the base configuration.
  static ParityVector base(int n, int k);

  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  int ones() const;   // n
  int twos() const;   // k
  int length() const { return static_cast<int>(entries_.size()); }  // M

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
  friend auto operator<=>(const ParityVector& l, const ParityVector& r) {
    return l.entries_ <=> r.entries_;
  }
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

struct TwoModularRow {
  int twos = 0;
  bool trailing_one = false;
  int value() const { return 2 * twos + (trailing_one ? 1 : 0); }
};

std::vector<TwoModularRow> two_modular_rows(const Partition& p);
// One line per part, e.g. "2 2 2 1" for 7.
std::vector<std::string> render_two_modular(const Partition& p);

struct Hook {
  int leg = 0;  // vertical, including the corner
  int arm = 0;  // horizontal, including the corner
  friend bool operator==(const Hook&, const Hook&) = default;
};

// Innermost hook first; legs and arms strictly increase along the list.
struct HookDecomposition {
  std::vector<Hook> hooks;
  friend bool operator==(const HookDecomposition&, const HookDecomposition&) = default;
};

// (n, n-1, ..., 1) for gap 1, (2n-1, ..., 3, 1) for gap 2.
Partition staircase(int n, int gap);

// Row-wise sum of a staircase and mu (nu(mu) <= nu(base)).
Partition column_insert(const Partition& base, const Partition& mu);

struct ColumnSplit {
  Partition base;
  Partition mu;
};
ColumnSplit column_extract(const Partition& p, int n, int gap);

// Attach hat3 to the right of the m rows of length m at the top of hat2.
Partition durfee_merge(const Partition& hat2, const Partition& hat3, int m);

struct DurfeeSplit {
  Partition hat2;
  Partition hat3;
  int side = 0;
};
DurfeeSplit durfee_split(const Partition& p);

// p: k distinct even parts, all >= 2n+2. Removes 2n from each part, then
// 2, 4, ..., 2k from the smallest up; returns the leftover (<= k even parts).
Partition even_extract(const Partition& p, int n);
Partition even_insert(const Partition& leftover, int k, int n);

Partition parity_join(const Partition& odd_part, const Partition& even_part);

struct ParitySplit {
  Partition odd_part;
  Partition even_part;
};
ParitySplit parity_split(const Partition& p);

// Minimal RR partitions: no 2-thick column can be removed without breaking
// the gap condition or a part's parity.
bool is_minimal(const Partition& p);
Partition vector_to_minimal(const ParityVector& v);
ParityVector minimal_to_vector(const Partition& p);

// Heights M-i+1 of the intermediate columns of v, one per "2 then 1" pattern
// at 1-based index i, as a partition (tallest first).
Partition intermediate_columns(const ParityVector& v);

// Heights h such that removing 2 from each of the h largest parts keeps p an
// RR partition with the same number of parts (tallest first).
std::vector<int> legal_two_columns(const Partition& p);
std::optional<Partition> extract_two_column(const Partition& p, int height);

HookDecomposition hooks_of(const ParityVector& v, const Partition& cols);
// Nested-hook partition in an n x k box, returned 2-modular (every part doubled).
Partition hooks_fold(const ParityVector& v, const Partition& cols);

struct Unfolded {
  ParityVector vector;
  Partition cols;
  HookDecomposition hooks;
};
Unfolded hooks_unfold(const Partition& box, int n, int k);

struct RrDecomposition {
  ParityVector vector;
  Partition evencols;  // heights of extracted 2-columns, each <= M
  Partition minimal;
  std::vector<int> extraction_order;  // heights in the order they were removed
};
RrDecomposition rr_decompose(const Partition& p);
Partition rr_compose(const ParityVector& v, const Partition& evencols);

}  // namespace qpart
