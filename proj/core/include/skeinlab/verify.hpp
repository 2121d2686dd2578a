#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeinlab/census.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/vassiliev.hpp"

namespace skeinlab {

struct VerifyConfig {
  std::vector<Family> families{Family::Jones, Family::Homfly, Family::Dubrovnik};
  std::vector<long> twiceAValues{1, 2, 3};  // a = 1/2, 1, 3/2
  /// Extrapolation depth; when unset each instance uses max(N, K) + 10 so at
  /// least ten orders beyond the initial data get checked.
  std::optional<long> jmax;
  EngineConfig engines = EngineConfig::fromEnv();
  int jobs = 1;
};

struct VerifyOutcome {
  std::string reportJson;  // stable machine-readable document
  std::string summary;     // fixed-width table
  bool allPassed = false;
};

/// Runs every (entry, family, a) determination plus the bound checks
/// (Morton, span, divisibility, window containment, a = 1 bridge,
/// triviality). Per-entry errors are recorded, never abort the batch.
VerifyOutcome runVerification(const std::vector<CensusEntry>& entries, const VerifyConfig& cfg);

/// "1/2", "1", "3/2" from 2a; "-" for the jones family's -1.
std::string halfIntToString(long twiceA);
long parseHalfInt(const std::string& text);  // accepts "k" and "k/2"

}  // namespace skeinlab
