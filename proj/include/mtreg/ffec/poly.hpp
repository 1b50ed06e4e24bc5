#pragma once

#include <utility>
#include <vector>

#include "mtreg/ffec/fq.hpp"

namespace mtreg {

/// Polynomial over F_q, coefficients low degree first, no trailing zeros.
class FqPoly {
 public:
  FqPoly(FieldPtr F, std::vector<FqElem> coeffs);

  static FqPoly from_ints(FieldPtr F, const std::vector<std::int64_t>& c);
  static FqPoly constant(const FqElem& c);
  static FqPoly x(FieldPtr F);

  const FieldPtr& field() const { return F_; }
  const std::vector<FqElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FqElem lead() const;
  FqElem eval(const FqElem& t) const;
  FqPoly monic() const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  FieldPtr F_;
  std::vector<FqElem> c_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(FqPoly a, FqPoly b);  // monic, or zero
FqPoly powmod(const FqPoly& base, std::int64_t e, const FqPoly& m);

/// Roots of f in F_q with multiplicity, in canonical element order.
std::vector<FqElem> ff_roots(const FqPoly& f);

}  // namespace mtreg
