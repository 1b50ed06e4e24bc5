#pragma once

#include <vector>

#include "mtreg/bockstein/structure.hpp"
#include "mtreg/regulator/mt_table.hpp"

namespace mtreg {

/// N x N matrix over Z[G] in the block form [[*, 0], [0, I_{m_n}]].
struct PsiMatrix {
  PointsStructure structure;
  std::vector<IntElem> e;

  explicit PsiMatrix(const PointsStructure& st);
  static PsiMatrix identity(const PointsStructure& st);
  IntElem& operator()(int row, int col) { return e[static_cast<std::size_t>(row * structure.N() + col)]; }
  const IntElem& operator()(int row, int col) const { return e[static_cast<std::size_t>(row * structure.N() + col)]; }
  /// ShapeError unless the level-n blocks are (0, I) and rho_r(entry) is J_s-invariant for r > s.
  void check_shape() const;
  friend bool operator==(const PsiMatrix& a, const PsiMatrix& b) { return a.structure == b.structure && a.e == b.e; }
};

/// Canonical solution: entry = sum_c c~ sigma^c with c < p^r and c~ in [0, p^{n-l}).
/// The table is validated first (TableLevelMismatch).
PsiMatrix solve_psi(const MTTable& table);

/// rho_r(Psi(row, col)) (x) (sigma^{p^l} - 1) reproduces every table cell.
bool satisfies_table(const PsiMatrix& psi, const MTTable& table);

/// eps_{F_p}(det Psi) != 0, i.e. det Psi is a unit of Z_p[G].
bool det_is_unit(const PsiMatrix& psi);

/// IdealViolation naming the first cell where p^{l-r}(Psi1 - Psi2) leaves
/// (sigma^{p^r} - 1) + Tr_{J_r} mod p^M.
void check_same_congruences(const PsiMatrix& a, const PsiMatrix& b, int M);

}  // namespace mtreg
