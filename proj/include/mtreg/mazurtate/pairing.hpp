#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtreg/groupring/group.hpp"
#include "mtreg/mazurtate/selmer.hpp"

namespace mtreg {

/// Inputs of the n = 1 pairing pipeline.
struct PairingCase {
  int p = 3;
  NumberFieldData nf{{0, 1}, {{1}}};
  std::vector<FElem> torsion_poly;
  Rational lambda = 0;
  SelmerGroupData selmer;
  std::vector<PlaceRestrictionData> places;
  /// point label -> place label -> reduction on the residue curve.
  std::map<std::string, std::map<std::string, ECPoint>> point_reductions;
};

struct PairAuditRow {
  std::string place;
  std::int64_t g = 0;  // sigma^g
  std::int64_t contribution = 0;
};

struct PairResult {
  /// Exponent of -<P,Q>_1 against sigma - 1, i.e. sum_g c_g g.
  std::int64_t neg_exponent = 0;
  std::vector<std::int64_t> coefficients;  // c_g, g = 0..p-1
  std::vector<PairAuditRow> audit;
  std::vector<std::int64_t> preimage;

  AugClass pairing(const GroupData& g) const;
};

PairResult mt_pair(const PairingCase& c, const std::string& P, const std::string& Q, std::int64_t free_value = 0);

/// Membership of the restriction of xi in the Kummer image at every V place.
bool check_local_conditions(const PairingCase& c, const SelmerElem& xi);

}  // namespace mtreg
