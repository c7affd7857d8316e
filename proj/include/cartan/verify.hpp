// Copyright cartan-spinors contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Verification suites over one sphere / algebra dimension.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/dirac_spectrum.hpp"

namespace cartan {

inline constexpr const char* version_string = "0.1.0";
inline constexpr int schema_version = 1;

enum class Suite { clifford, bundle, curvature, lichnerowicz, killing, splitting, all };

const char* to_string(Suite s);
/// Throws Error(ErrorCode::usage) on unknown names.
Suite parse_suite(const std::string& s);
Mode parse_mode(const std::string& s);

struct VerifyConfig {
  int n = 3;
  int m = 2;               ///< degree bound for the basis-sweeping suites
  Mode mode = Mode::exact;
  int samples = 100;
  std::uint64_t seed = 1;
};

/// Throws Error(ErrorCode::usage) unless 1 <= n <= 7, 0 <= m <= 6, samples >= 1.
void validate(const VerifyConfig& c);

struct CheckResult {
  std::string check_name;
  int n = 0;
  int samples = 0;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  nlohmann::ordered_json details;  ///< null unless the check has extra output
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(CheckResult c);
};

/// Runs one suite (or all of them). The Clifford suite accepts n up to 8;
/// every other suite follows the sphere bound n <= 7.
VerificationReport run_suite(Suite suite, const VerifyConfig& config);

nlohmann::ordered_json to_json(const CheckResult& c);
nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const VerifyConfig& c);
std::string render_text(const VerificationReport& r);

}  // namespace cartan
