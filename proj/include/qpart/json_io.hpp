#pragma once

#include <json.hpp>

#include "qpart/identities.hpp"
#include "qpart/suite.hpp"

namespace qpart {

// Coefficients are written as decimal strings so that big integers survive.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const TruncatedSeries& s);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Witness& w);
// Wall-clock fields are left out unless timing is set, keeping output
// byte-identical between runs.
nlohmann::json to_json(const VerificationReport& r, bool timing = false);
nlohmann::json to_json(const SuiteReport& r, bool timing = false);
nlohmann::json catalog_json();

}  // namespace qpart
