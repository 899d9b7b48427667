#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpart/identities.hpp"

namespace qpart {

enum class Profile { quick, full };

struct SuiteOptions {
  Profile profile = Profile::quick;
  std::uint64_t seed = 20240607;
  unsigned threads = 1;
  std::vector<int> only;          // criterion ids to run; empty = all
  bool mutate_thm4 = false;       // test hook, see VerifyOptions
  bool empty_catalog = false;     // test hook: run with no criteria at all
};

struct CriterionWitness {
  std::string identity;
  Params params;
  Witness witness;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = true;
  long checks = 0;                    // number of sub-checks performed
  std::vector<std::string> failures;  // first few failing sub-checks
  std::optional<CriterionWitness> witness;
  double seconds = 0;
};

struct SuiteReport {
  Profile profile = Profile::quick;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;  // ordered by id
  bool pass() const;
};

std::string_view profile_name(Profile p);
// Throws UsageError for an unknown name.
Profile parse_profile(std::string_view name);

// Criterion ids and titles in order.
std::vector<std::pair<int, std::string>> suite_criteria();

// Runs the acceptance criteria. Results come back in id order whatever the
// thread count. Throws UsageError if nothing is selected.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace qpart
