#pragma once

#include <random>

#include "mtreg/bockstein/grmatrix.hpp"
#include "mtreg/bockstein/structure.hpp"

namespace mtreg {

/// Endomorphism of the dual points: phi(P^t_col) = sum_row M(row, col) P^t_row, entries acting
/// through rho_{level(row)}. Columns at level n are fixed basis vectors and the block of rows at
/// level n against columns below n vanishes; for r > s the entry is J_s-invariant mod ker rho_r.
class PhiMatrix {
 public:
  /// ShapeError when m does not have this form.
  PhiMatrix(PointsStructure st, GRMatrix m);
  static PhiMatrix identity(const PointsStructure& st, int M);

  const PointsStructure& structure() const { return st_; }
  const GRMatrix& matrix() const { return m_; }
  const GRContext& ctx() const { return m_.ctx(); }
  int precision() const { return m_.ctx().R.M; }

  bool is_invertible() const { return eps_fp_det(m_) != 0; }
  /// Lambda with phi^{-1}(P^t_col) = sum Lambda(row, col) P^t_row. ZeroInversion if singular.
  PhiMatrix inverse() const;
  /// The Z/p^M-linear map on the dual points, coordinates sigma^k P^t_(r,j) with k < p^r.
  ZpmMatrix on_points() const;

 private:
  PointsStructure st_;
  GRMatrix m_;
};

/// Offset of the block of P^t_k inside the dual-point coordinates (size p^{r_k}).
int point_coord_offset(const PointsStructure& st, int k);
int point_coord_dim(const PointsStructure& st);

/// Random invertible phi of the admissible shape.
PhiMatrix random_phi(const PointsStructure& st, int M, std::mt19937_64& rng);
/// Random shape-conforming matrix without the invertibility filter.
PhiMatrix random_phi_shape(const PointsStructure& st, int M, std::mt19937_64& rng);

}  // namespace mtreg
