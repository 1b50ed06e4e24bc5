#pragma once

#include <cstdint>
#include <vector>

#include "mtreg/exactalg/zpm.hpp"
#include "mtreg/groupring/group.hpp"

namespace mtreg {

/// Element of Z/p^M[G]: coefficient of sigma^i at index i.
using GRVec = std::vector<std::int64_t>;

struct GRContext {
  GroupData g;
  ZpmRing R;
  GRContext() = default;
  GRContext(GroupData g_, int M) : g(g_), R(g_.p(), M) {}

  GRVec zero() const { return GRVec(static_cast<std::size_t>(g.order()), 0); }
  GRVec basis(std::int64_t k) const;
  GRVec from(const IntElem& x) const { return reduce_coeffs(x, R); }
  GRVec add(const GRVec& a, const GRVec& b) const;
  GRVec sub(const GRVec& a, const GRVec& b) const;
  GRVec neg(const GRVec& a) const;
  GRVec mul(const GRVec& a, const GRVec& b) const;
  GRVec scale(std::int64_t s, const GRVec& a) const;
  /// Augmentation mod p.
  std::int64_t eps_fp(const GRVec& a) const;
  /// Coefficients of rho_r(a) on sigma^c, c < p^r.
  std::vector<std::int64_t> rho(const GRVec& a, int r) const;
  bool is_zero(const GRVec& a) const;
  /// Canonical integer lift with coefficients in [0, p^M).
  IntElem lift(const GRVec& a) const;
};

/// Square matrix over Z/p^M[G].
class GRMatrix {
 public:
  GRMatrix() = default;
  GRMatrix(const GRContext& ctx, int n) : ctx_(ctx), n_(n), e_(static_cast<std::size_t>(n) * n, ctx.zero()) {}
  static GRMatrix identity(const GRContext& ctx, int n);

  const GRContext& ctx() const { return ctx_; }
  int size() const { return n_; }
  GRVec& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const GRVec& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const GRMatrix& a, const GRMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  GRContext ctx_;
  int n_ = 0;
  std::vector<GRVec> e_;
};

GRMatrix multiply(const GRMatrix& A, const GRMatrix& B);
/// Z/p^M matrix of A acting on (Z/p^M[G])^n; block (i, j) is multiplication by A(i, j).
ZpmMatrix expand(const GRMatrix& A);
/// eps_{F_p}(det A) computed as det over F_p of the augmented matrix.
std::int64_t eps_fp_det(const GRMatrix& A);
/// Gauss-Jordan with unit pivots; ZeroInversion when eps_fp_det(A) = 0.
GRMatrix inverse(const GRMatrix& A);

}  // namespace mtreg
