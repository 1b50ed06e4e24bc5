#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mtreg/mazurtate/pairing.hpp"

namespace mtreg::cli {

struct PairingSection {
  PairingCase pcase;
  std::vector<std::string> dual_labels;   // P^t_{(0,i)}
  std::vector<std::string> point_labels;  // P_{(0,j)}
};

/// Parses and validates the pairing_pipeline section; errors carry the JSON path.
PairingSection parse_pairing_pipeline(const nlohmann::json& j, int p, const std::string& path = "$.pairing_pipeline");

}  // namespace mtreg::cli
