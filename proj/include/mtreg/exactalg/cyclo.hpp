#pragma once

#include <cstdint>
#include <vector>

#include "mtreg/exactalg/complex_approx.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

/// Element of Q(zeta_m), m = p^n, in the power basis 1, zeta, ..., zeta^(phi(m)-1).
/// n = 0 is allowed and gives Q itself.
class CycloNum {
 public:
  CycloNum(int p, int n);
  /// Coefficients of zeta^i for i = 0..len-1; any length, reduced on construction.
  CycloNum(int p, int n, const std::vector<Rational>& coeffs);

  static CycloNum from_rational(int p, int n, const Rational& x);
  static CycloNum zeta_power(int p, int n, std::int64_t k);

  int p() const { return p_; }
  int n() const { return n_; }
  std::int64_t modulus() const { return m_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coefficient of zeta^0.
  const Rational& constant() const { return c_[0]; }

  /// Image under zeta -> zeta^k; throws BadExponent unless gcd(k, p) = 1.
  CycloNum galois_map(std::int64_t k) const;
  /// Complex value under zeta -> exp(2 pi i j_idx / m).
  ComplexApprox embed(std::int64_t j_idx) const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum operator-() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  void check_same(const CycloNum& o) const;

  int p_;
  int n_;
  std::int64_t m_;
  std::vector<Rational> c_;
};

CycloNum operator+(CycloNum a, const CycloNum& b);
CycloNum operator-(CycloNum a, const CycloNum& b);
CycloNum operator*(CycloNum a, const CycloNum& b);
CycloNum operator*(const Rational& s, CycloNum a);
/// Throws ZeroInversion for a = 0.
CycloNum cyclo_invert(const CycloNum& a);
CycloNum operator/(const CycloNum& a, const CycloNum& b);
CycloNum pow(const CycloNum& a, int e);

}  // namespace mtreg
