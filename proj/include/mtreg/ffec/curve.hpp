#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtreg/ffec/fq.hpp"

namespace mtreg {

struct ECPoint {
  bool inf = true;
  FqElem x;
  FqElem y;

  static ECPoint infinity() { return {}; }
  static ECPoint affine(FqElem x, FqElem y) { return {false, std::move(x), std::move(y)}; }

  friend bool operator==(const ECPoint& a, const ECPoint& b);
  friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
  /// Canonical order: infinity first, then by (index x, index y).
  friend bool operator<(const ECPoint& a, const ECPoint& b);
};

/// y^2 = x^3 + a x + b over F_q.
class CurveFq {
 public:
  CurveFq(FqElem a, FqElem b);  // ShapeError when singular

  const FieldPtr& field() const { return a_.field(); }
  const FqElem& a() const { return a_; }
  const FqElem& b() const { return b_; }

  bool on_curve(const ECPoint& P) const;
  /// Validated affine point (ShapeError when off the curve).
  ECPoint point(const FqElem& x, const FqElem& y) const;
  ECPoint point(std::int64_t x, std::int64_t y) const;

 private:
  FqElem a_;
  FqElem b_;
};

ECPoint ec_neg(const CurveFq& E, const ECPoint& P);
ECPoint ec_add(const CurveFq& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_sub(const CurveFq& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const CurveFq& E, const ECPoint& P, std::int64_t k);
ECPoint ec_frobenius(const ECPoint& P);

/// Affine points in canonical order (infinity excluded).
std::vector<ECPoint> affine_points(const CurveFq& E);
std::int64_t point_count(const CurveFq& E);
std::int64_t point_order(const CurveFq& E, const ECPoint& P);

std::string to_string(const ECPoint& P);

}  // namespace mtreg
