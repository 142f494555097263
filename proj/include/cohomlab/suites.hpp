#pragma once

#include <string>
#include <vector>

#include "cohomlab/io.hpp"

namespace cohomlab {

struct VerifyConfig {
  SpaceRef space;
  std::uint64_t seed = 42;
  std::vector<double> radii{1.0, 2.0};
  AuditOptions options;
  double tolerance = kIdentityTolerance;
  /// Random instances per suite; 0 picks the suite's own default.
  std::size_t count = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<LawAudit> laws;
  Json details = Json::object();

  bool passed() const noexcept;
};

const std::vector<std::string>& suite_names();

/// Throws Error for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

Json to_json(const SuiteReport& report);

}  // namespace cohomlab
