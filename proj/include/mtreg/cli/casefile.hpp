#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtreg/cli/pairing_section.hpp"
#include "mtreg/regulator/regulator.hpp"

namespace mtreg::cli {

inline constexpr const char* kCaseFormat = "mtreg-case/1";

struct CaseHeader {
  int p = 3;
  int n = 1;
  std::string label;
  std::vector<std::string> hypotheses_asserted;
  int M = 7;
  double float_tol = 1e-8;
  std::vector<std::int64_t> j_idx{1};
};

/// Parsed mtreg-case/1 file. The pairing pipeline is kept as canonical JSON and parsed on demand.
struct CaseFile {
  CaseHeader header;
  PointsStructure structure;
  std::optional<HeightMatrix> heights;
  std::optional<MTTable> mt_table;
  std::optional<AnalyticInput> analytic;
  std::optional<nlohmann::json> pairing_pipeline;
  std::map<std::string, std::int64_t> expected_pairings;

  GroupData group() const { return structure.group(); }
  PairingSection pairing() const;
};

/// SchemaError with a JSON path (or parse position) on malformed input. Cross-field checks that
/// need the algebra (table levels, places, heights) are left to validate_case.
CaseFile parse_case(const nlohmann::json& j);
CaseFile load_case(const std::string& path);
/// Parses text; syntax errors become SchemaError with line and column.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

nlohmann::json serialize_case(const CaseFile& c);

struct ValidationReport {
  std::vector<std::string> checks;  // human-readable lines, in order
};

/// Full consistency check: table levels and invariance, heights, analytic count, j_idx prime to
/// p, places (tame, consistent), Selmer generators satisfy the local conditions, negative controls
/// do not. Throws the first failure.
ValidationReport validate_case(const CaseFile& c);

}  // namespace mtreg::cli
