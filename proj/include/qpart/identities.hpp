#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/partition.hpp"
#include "qpart/series.hpp"

namespace qpart {

// Bad identity name, side or parameter. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IdentityKind { series, polynomial, enumerative };
std::string_view kind_name(IdentityKind k);

struct ParamSpec {
  std::string name;
  long min = 0;
  long max = 0;
  long fallback = 0;  // used when the caller does not supply the parameter
};

using Params = std::map<std::string, long>;

struct IdentityDescriptor {
  std::string name;
  IdentityKind kind = IdentityKind::series;
  std::vector<ParamSpec> params;
  std::vector<std::string> sides;  // "L", "R", and "M" for three-way identities
  std::string anchor;              // the formula, in plain text
  std::string term_degree;         // least q-degree of the summation index term
  unsigned default_trunc = 20;
};

const std::vector<IdentityDescriptor>& catalog();
// Throws UsageError for unknown names.
const IdentityDescriptor& describe(std::string_view name);
// Fills in defaults and range-checks; throws UsageError.
Params resolve_params(const IdentityDescriptor& d, const Params& given);

// Truncated expansion of one side. Polynomial-kind entries are returned
// truncated at T as well; use build_polynomial for the exact form.
TruncatedSeries build(std::string_view name, std::string_view side, const Params& params,
                      unsigned trunc);
// Exact side of a polynomial-kind identity (thm4, thm4_corrected, corollary).
// For the corollary both sides are multiplied through by (q^2;q^2)_m.
Polynomial build_polynomial(std::string_view name, std::string_view side, const Params& params);

struct Witness {
  Monomial mono;
  Integer lhs;
  Integer rhs;
  std::string lhs_side;
  std::string rhs_side;
};

struct VerificationReport {
  std::string name;
  Params params;
  std::optional<unsigned> trunc;  // absent for exact polynomial comparisons
  bool pass = false;
  std::optional<Witness> witness;
  double seconds = 0;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  // Test hook: drop the ((-1)^L - 1)/2 correction term from thm4's right side.
  bool drop_thm4_correction = false;
};

VerificationReport verify(std::string_view name, const Params& params, unsigned trunc,
                          const VerifyOptions& options = {});

// Compares builder series against partition enumeration. Accepts
// ismail_lhs_interp, ismail_rhs_interp, ramanujan_lhs_interp,
// ramanujan_rhs_interp, rr_last, thm3, thm5, thm7, gf_bdd, gf_parts, gf_dist.
VerificationReport oracle_check(std::string_view name, const Params& params, unsigned trunc);

VerificationReport corollary_check(long L, long m);

// Which sides of the pair identity count (pi1, pi2): relation l(pi2) <= nu(pi1)
// for the left and d(pi2) <= r(pi1) for the right, optionally with parts <= N.
struct PairMembership {
  bool left = false;
  bool right = false;
};
PairMembership pair_membership(const Partition& first, const Partition& second,
                               std::optional<int> bound = std::nullopt);

}  // namespace qpart
