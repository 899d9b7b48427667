#pragma once

#include "qpart/polynomial.hpp"

namespace qpart {

// Gaussian coefficient indexed by box shape: the generating function of
// partitions fitting in a rows x cols box, i.e. [rows+cols over cols]_q.
// Zero when either side is negative. Degree rows*cols, palindromic.
Polynomial q_binomial(long rows, long cols);

// Conventional [n over k]_q; zero unless 0 <= k <= n.
Polynomial q_choose(long n, long k);

}  // namespace qpart
