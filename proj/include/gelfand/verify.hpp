#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gelfand/io.hpp"

namespace gelfand {

struct CheckResult {
  std::string id;
  std::string claim;  // plain-language statement being checked
  bool pass = false;
  bool exhausted = false;  // gave up after raising N
  std::string detail;
  json witness;            // certificate data, null when there is none
  std::string witness_path;
};

struct VerificationReport {
  std::string suite;
  int n_trunc = 8;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
  bool exhausted() const;
  /// 0 pass, 2 violation, 3 truncation exhausted without other violations.
  int exit_code() const;
  std::string text() const;
  json to_json() const;
};

const std::vector<std::string>& suite_names();  // schurian, abscyclic, algebra, hc
/// Runs one suite, or every suite for "all". Deterministic in (suite, N, seed).
VerificationReport run_suite(const std::string& suite, int n_trunc, std::uint64_t seed);
/// Writes witnesses to dir/<id>.json, filling witness_path, then
/// dir/report.txt and dir/report.json.
void write_report(VerificationReport& r, const std::string& dir);

/// Largest N tried when a computation asks for more room.
inline constexpr int kMaxTruncation = 64;

}  // namespace gelfand
