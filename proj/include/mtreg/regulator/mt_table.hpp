#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mtreg/bockstein/structure.hpp"

namespace mtreg {

/// Values <P^t_{(s,i)}, sigma^c P_{(r,j)}> for r, s < n and 0 <= c < p^r, each an AugClass at
/// level max(r, s). Keyed by (row, col) = (index of (r,j), index of (s,i)) as in Psi.
struct MTTable {
  PointsStructure structure;
  std::map<std::pair<int, int>, std::vector<AugClass>> entries;

  /// TableLevelMismatch for missing cells, wrong levels, wrong family sizes, or values that are not
  /// invariant under J_s for r > s.
  void validate() const;
  const std::vector<AugClass>& at(int row, int col) const;
  friend bool operator==(const MTTable& a, const MTTable& b);
};

/// Exponent-level constructor; exps[c] is reduced mod p^{n-l}.
std::vector<AugClass> aug_family(const GroupData& g, int level, const std::vector<std::int64_t>& exps);

}  // namespace mtreg
