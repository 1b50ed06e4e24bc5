#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mtreg::cli {

enum ExitCode : int { kPass = 0, kFail = 2, kInvalid = 3 };

/// Resolves the working precision M: flag, then MTREG_PRECISION, then the case header.
struct PrecisionChoice {
  int M = 0;
  std::string source;  // "flag", "env" or "file"
};
PrecisionChoice resolve_precision(std::optional<int> flag, const char* env, int file_M);

struct VerifyOptions {
  std::string case_path;
  std::optional<int> precision;
  std::optional<double> tol;
  bool j_sweep = false;
  std::string report_path;
};

struct PairOptions {
  std::string case_path;
  std::vector<std::string> points;  // empty: evaluate every expected pairing
  std::int64_t free_value = 0;
  std::string report_path;
};

struct OracleOptions {
  std::string structure;  // "m0,m1,..."
  int p = 3;
  std::uint64_t seed = 1;
  int trials = 5;
  std::optional<int> precision;
  bool self_test = false;
  std::string report_path;
};

struct ValidateOptions {
  std::string case_path;
  std::string canonical_path;  // write serialize(parse(file)) here when set
};

/// Each command writes a text report to out and diagnostics to err, and returns an ExitCode.
/// The JSON report (sorted keys) goes to report_path when set.
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_pair(const PairOptions& o, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err);

}  // namespace mtreg::cli
