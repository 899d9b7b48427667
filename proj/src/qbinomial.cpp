#include "qpart/qbinomial.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qpart {

namespace {

// Rows of the q-Pascal triangle, grown on demand. Entries are written once
// under the lock and never modified afterwards.
class GaussianTable {
 public:
  Polynomial get(long n, long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) extend();
    return rows_[n][k];
  }

 private:
  // [n over k] = [n-1 over k-1] + q^k [n-1 over k]
  void extend() {
    const long n = static_cast<long>(rows_.size());
    std::vector<Polynomial> row(n + 1);
    row[0] = Polynomial(1);
    row[n] = Polynomial(1);
    for (long k = 1; k < n; ++k)
      row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k].times(1, q_pow(static_cast<unsigned>(k)));
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<Polynomial>> rows_;
};

GaussianTable& table() {
  static GaussianTable t;
  return t;
}

}  // namespace

Polynomial q_choose(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (n > 2000) throw std::invalid_argument("q_choose: n too large");
  return table().get(n, k);
}

Polynomial q_binomial(long rows, long cols) {
  if (rows < 0 || cols < 0) return {};
  return q_choose(rows + cols, cols);
}

}  // namespace qpart
