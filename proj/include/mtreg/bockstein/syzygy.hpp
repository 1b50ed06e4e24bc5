#pragma once

#include "mtreg/bockstein/structure.hpp"
#include "mtreg/exactalg/zpm.hpp"

namespace mtreg {

/// 0 -> A^t -iota-> X -Theta-> X -pi-> A^* -> 0 over Z/p^M, written as Z/p^M matrices.
/// X = (Z/p^M[G])^N with coordinates (k, sigma^i) at k * p^n + i; A^t and A^* use the
/// dual-point coordinates sigma^c P_(r,j), c < p^r.
struct SyzygyPresentation {
  PointsStructure structure;
  ZpmRing R;
  ZpmMatrix iota;
  ZpmMatrix theta;
  ZpmMatrix pi;

  SyzygyPresentation(const PointsStructure& st, int M);

  /// Block-diagonal multiplication on X by one element per block.
  ZpmMatrix block_multiplication(const std::vector<std::vector<std::int64_t>>& per_block) const;
  /// Compositions vanish and kernels equal images at all four nodes (counted via image sizes).
  bool is_exact() const;
};

}  // namespace mtreg
