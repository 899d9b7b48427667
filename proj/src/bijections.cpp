#include "qpart/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qpart {

namespace {

std::vector<int> padded(const Partition& p, std::size_t len) {
  std::vector<int> out(p.parts());
  out.resize(std::max(len, out.size()), 0);
  return out;
}

Partition drop_zeros(std::vector<int> v) {
  v.erase(std::remove(v.begin(), v.end(), 0), v.end());
  return Partition(std::move(v));
}

void require_gap2(const Partition& p, const char* op) {
  if (!has_gap(p, 2))
    throw std::invalid_argument(std::string(op) + ": " + p.to_string() +
                                " violates the gap-2 condition");
}

bool is_staircase(const Partition& p, int gap) { return p == staircase(p.length(), gap); }

}  // namespace

ParityVector::ParityVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e != 1 && e != 2)
      throw std::invalid_argument("parity vector entries must be 1 or 2, got " +
                                  std::to_string(e));
}

ParityVector ParityVector::parse(std::string_view text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '1' || c == '2') out.push_back(c - '0');
    else if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
    else throw std::invalid_argument("malformed parity vector '" + std::string(text) + "'");
  }
  return ParityVector(std::move(out));
}

ParityVector ParityVector::base(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("ParityVector::base: negative count");
  std::vector<int> e(static_cast<std::size_t>(n), 1);
  e.insert(e.end(), static_cast<std::size_t>(k), 2);
  return ParityVector(std::move(e));
}

int ParityVector::ones() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), 1));
}

int ParityVector::twos() const { return length() - ones(); }

std::string ParityVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + entries_[i]);
  }
  return out + ")";
}

std::vector<TwoModularRow> two_modular_rows(const Partition& p) {
  std::vector<TwoModularRow> rows;
  for (int v : p.parts()) rows.push_back({v / 2, v % 2 == 1});
  return rows;
}

std::vector<std::string> render_two_modular(const Partition& p) {
  std::vector<std::string> lines;
  for (const auto& row : two_modular_rows(p)) {
    std::string line;
    for (int i = 0; i < row.twos; ++i) line += i ? " 2" : "2";
    if (row.trailing_one) line += line.empty() ? "1" : " 1";
    lines.push_back(line);
  }
  return lines;
}

Partition staircase(int n, int gap) {
  if (n < 0) throw std::invalid_argument("staircase: negative length");
  if (gap != 1 && gap != 2) throw std::invalid_argument("staircase: gap must be 1 or 2");
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) parts.push_back(gap == 1 ? i : 2 * i - 1);
  return Partition(std::move(parts));
}

Partition column_insert(const Partition& base, const Partition& mu) {
  if (!is_staircase(base, 1) && !is_staircase(base, 2))
    throw std::invalid_argument("column_insert: base " + base.to_string() + " is not a staircase");
  if (mu.length() > base.length())
    throw std::invalid_argument("column_insert: mu " + mu.to_string() + " has more parts than base");
  std::vector<int> out(base.parts());
  for (int i = 0; i < mu.length(); ++i) out[i] += mu[i];
  return Partition(std::move(out));
}

ColumnSplit column_extract(const Partition& p, int n, int gap) {
  if (p.length() != n)
    throw std::invalid_argument("column_extract: " + p.to_string() + " does not have " +
                                std::to_string(n) + " parts");
  if (!has_gap(p, gap))
    throw std::invalid_argument("column_extract: " + p.to_string() + " violates the gap-" +
                                std::to_string(gap) + " condition");
  Partition base = staircase(n, gap);
  std::vector<int> mu(p.parts());
  for (int i = 0; i < n; ++i) mu[i] -= base[i];
  return {std::move(base), drop_zeros(std::move(mu))};
}

Partition durfee_merge(const Partition& hat2, const Partition& hat3, int m) {
  if (m < 0) throw std::invalid_argument("durfee_merge: negative side");
  if (hat2.largest() != m)
    throw std::invalid_argument("durfee_merge: largest part of hat2 is not m");
  if (m > 0 && (hat2.length() < m || hat2[m - 1] != m))
    throw std::invalid_argument("durfee_merge: hat2 does not repeat m at least m times");
  if (hat3.length() > m) throw std::invalid_argument("durfee_merge: hat3 has more than m parts");
  std::vector<int> out(hat2.parts());
  for (int i = 0; i < hat3.length(); ++i) out[i] += hat3[i];
  return Partition(std::move(out));
}

DurfeeSplit durfee_split(const Partition& p) {
  const int m = durfee(p);
  std::vector<int> hat2(p.parts()), hat3;
  for (int i = 0; i < m; ++i) {
    hat3.push_back(p[i] - m);
    hat2[i] = m;
  }
  return {Partition(std::move(hat2)), drop_zeros(std::move(hat3)), m};
}

Partition even_extract(const Partition& p, int n) {
  if (n < 0) throw std::invalid_argument("even_extract: negative offset");
  if (!has_gap(p, 1)) throw std::invalid_argument("even_extract: parts are not distinct");
  const int k = p.length();
  std::vector<int> out(p.parts());
  for (int i = 0; i < k; ++i) {
    if (p[i] % 2 != 0) throw std::invalid_argument("even_extract: odd part " + std::to_string(p[i]));
    if (p[i] < 2 * n + 2)
      throw std::invalid_argument("even_extract: part " + std::to_string(p[i]) + " below 2n+2");
    out[i] -= 2 * n + 2 * (k - i);
  }
  return drop_zeros(std::move(out));
}

Partition even_insert(const Partition& leftover, int k, int n) {
  if (n < 0 || k < 0) throw std::invalid_argument("even_insert: negative count");
  if (leftover.length() > k) throw std::invalid_argument("even_insert: more than k parts");
  for (int v : leftover.parts())
    if (v % 2 != 0) throw std::invalid_argument("even_insert: odd part " + std::to_string(v));
  std::vector<int> out = padded(leftover, static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[i] += 2 * n + 2 * (k - i);
  return Partition(std::move(out));
}

Partition parity_join(const Partition& odd_part, const Partition& even_part) {
  if (!has_gap(odd_part, 1) || !has_gap(even_part, 1))
    throw std::invalid_argument("parity_join: parts must be distinct");
  for (int v : odd_part.parts())
    if (v % 2 == 0) throw std::invalid_argument("parity_join: even part in odd_part");
  for (int v : even_part.parts())
    if (v % 2 == 1) throw std::invalid_argument("parity_join: odd part in even_part");
  if (!even_part.empty() && even_part.smallest() < 2 * odd_part.length() + 2)
    throw std::invalid_argument("parity_join: smallest even part must exceed 2*nu(odd_part)");
  std::vector<int> out(odd_part.parts());
  out.insert(out.end(), even_part.parts().begin(), even_part.parts().end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(std::move(out));
}

ParitySplit parity_split(const Partition& p) {
  if (!has_gap(p, 1)) throw std::invalid_argument("parity_split: parts must be distinct");
  if (!smallest_even(p).exceeds(2 * odd_count(p)))
    throw std::invalid_argument("parity_split: " + p.to_string() + " fails s_e > 2 nu_o");
  std::vector<int> odd, even;
  for (int v : p.parts()) (v % 2 ? odd : even).push_back(v);
  return {Partition(std::move(odd)), Partition(std::move(even))};
}

std::vector<int> legal_two_columns(const Partition& p) {
  require_gap2(p, "legal_two_columns");
  std::vector<int> out;
  const int M = p.length();
  for (int h = M; h >= 1; --h) {
    const bool ok = h < M ? p[h - 1] - p[h] >= 4 : p[M - 1] >= 3;
    if (ok) out.push_back(h);
  }
  return out;
}

std::optional<Partition> extract_two_column(const Partition& p, int height) {
  const auto legal = legal_two_columns(p);
  if (std::find(legal.begin(), legal.end(), height) == legal.end()) return std::nullopt;
  std::vector<int> out(p.parts());
  for (int i = 0; i < height; ++i) out[i] -= 2;
  return Partition(std::move(out));
}

bool is_minimal(const Partition& p) { return legal_two_columns(p).empty(); }

Partition vector_to_minimal(const ParityVector& v) {
  std::vector<int> up;
  for (int i = 0; i < v.length(); ++i) {
    if (i == 0) up.push_back(v[0]);
    else up.push_back(up.back() + (v[i] == v[i - 1] ? 2 : 3));
  }
  std::reverse(up.begin(), up.end());
  return Partition(std::move(up));
}

ParityVector minimal_to_vector(const Partition& p) {
  if (!is_minimal(p))
    throw std::invalid_argument("minimal_to_vector: " + p.to_string() + " is not minimal");
  std::vector<int> e;
  for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) e.push_back(*it % 2 ? 1 : 2);
  return ParityVector(std::move(e));
}

Partition intermediate_columns(const ParityVector& v) {
  std::vector<int> heights;
  const int M = v.length();
  for (int i = 1; i < M; ++i)  // 0-based i is the 1-based index i+1
    if (v[i - 1] == 2 && v[i] == 1) heights.push_back(M - i);
  return Partition(std::move(heights));
}

HookDecomposition hooks_of(const ParityVector& v, const Partition& cols) {
  if (cols != intermediate_columns(v))
    throw std::invalid_argument("hooks_of: columns " + cols.to_string() +
                                " do not match the intermediate columns of " + v.to_string());
  HookDecomposition out;
  int ones = 0, twos = 0;
  for (int i = v.length() - 1; i >= 1; --i) {
    (v[i] == 1 ? ones : twos) += 1;
    if (v[i - 1] == 2 && v[i] == 1) out.hooks.push_back({ones, twos + 1});
  }
  return out;
}

Partition hooks_fold(const ParityVector& v, const Partition& cols) {
  const auto hd = hooks_of(v, cols);
  const int d = static_cast<int>(hd.hooks.size());
  // Outermost hook (corner (1,1)) is the last one in the list.
  auto hook = [&](int r) { return hd.hooks[static_cast<std::size_t>(d - r)]; };
  std::vector<int> rows;
  for (int r = 1; r <= d; ++r) rows.push_back(r - 1 + hook(r).arm);
  const int height = d ? hook(1).leg : 0;
  for (int r = d + 1; r <= height; ++r) {
    int len = 0;
    for (int c = 1; c <= d; ++c)
      if (c + hook(c).leg - 1 >= r) ++len;
    rows.push_back(len);
  }
  for (int& x : rows) x *= 2;
  return Partition(std::move(rows));
}

Unfolded hooks_unfold(const Partition& box, int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("hooks_unfold: negative box side");
  if (box.length() > n || box.largest() > 2 * k)
    throw std::invalid_argument("hooks_unfold: " + box.to_string() + " does not fit the box");
  std::vector<int> half;
  for (int v : box.parts()) {
    if (v % 2) throw std::invalid_argument("hooks_unfold: box parts must be even");
    half.push_back(v / 2);
  }
  const Partition lambda(std::move(half));
  const Partition conj = conjugate(lambda);
  const int d = durfee(lambda);
  std::vector<Hook> outer_first;
  for (int r = 1; r <= d; ++r) outer_first.push_back({conj[r - 1] - r + 1, lambda[r - 1] - r + 1});

  std::vector<int> e;
  auto append = [&](int count, int value) { e.insert(e.end(), static_cast<std::size_t>(count), value); };
  if (d == 0) {
    append(n, 1);
    append(k, 2);
  } else {
    append(n - outer_first[0].leg, 1);
    append(k - outer_first[0].arm + 1, 2);
    for (int r = 0; r + 1 < d; ++r) {
      append(outer_first[r].leg - outer_first[r + 1].leg, 1);
      append(outer_first[r].arm - outer_first[r + 1].arm, 2);
    }
    append(outer_first[d - 1].leg, 1);
    append(outer_first[d - 1].arm - 1, 2);
  }
  Unfolded out;
  out.vector = ParityVector(std::move(e));
  out.cols = intermediate_columns(out.vector);
  out.hooks.hooks.assign(outer_first.rbegin(), outer_first.rend());
  return out;
}

RrDecomposition rr_decompose(const Partition& p) {
  require_gap2(p, "rr_decompose");
  RrDecomposition out;
  Partition cur = p;
  for (;;) {
    const auto legal = legal_two_columns(cur);
    if (legal.empty()) break;
    out.extraction_order.push_back(legal.front());
    cur = *extract_two_column(cur, legal.front());
  }
  std::vector<int> heights(out.extraction_order);
  std::sort(heights.begin(), heights.end(), std::greater<>());
  out.evencols = Partition(std::move(heights));
  out.vector = minimal_to_vector(cur);
  out.minimal = std::move(cur);
  return out;
}

Partition rr_compose(const ParityVector& v, const Partition& evencols) {
  if (evencols.largest() > v.length())
    throw std::invalid_argument("rr_compose: column height exceeds the vector length");
  std::vector<int> out = vector_to_minimal(v).parts();
  for (int h : evencols.parts())
    for (int i = 0; i < h; ++i) out[i] += 2;
  return Partition(std::move(out));
}

}  // namespace qpart
