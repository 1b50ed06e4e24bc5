#pragma once

#include <cstdint>
#include <vector>

#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/ffec/fq.hpp"

namespace mtreg {

/// Coordinates on the power basis 1, theta, ..., theta^{d-1}.
using FElem = std::vector<Rational>;

/// F = Q(theta) with a cyclic automorphism sigma of order d.
class NumberFieldData {
 public:
  /// poly: monic, ascending coefficients. sigma: d x d, column k = coordinates of sigma(theta^k).
  /// ShapeError unless sigma is a field automorphism of order d fixing Q.
  NumberFieldData(std::vector<Rational> poly, std::vector<std::vector<Rational>> sigma);

  int degree() const { return d_; }
  const std::vector<Rational>& poly() const { return poly_; }
  const std::vector<std::vector<Rational>>& sigma() const { return sigma_; }

  FElem from_rational(const Rational& c) const;
  FElem add(const FElem& a, const FElem& b) const;
  FElem mul(const FElem& a, const FElem& b) const;
  /// sigma^k(a).
  FElem act(std::int64_t k, const FElem& a) const;

 private:
  FElem apply_sigma(const FElem& a) const;
  int d_ = 1;
  std::vector<Rational> poly_;
  std::vector<std::vector<Rational>> sigma_;
};

/// The unramified ring Z/l^k[x]/(g) with g a monic integer lift of a residue-field modulus.
class GaloisRing {
 public:
  GaloisRing(FieldPtr residue, int k);

  using Elem = std::vector<std::int64_t>;  // d coordinates mod l^k

  const FieldPtr& residue() const { return F_; }
  int precision() const { return k_; }
  std::int64_t modulus() const { return mod_; }

  Elem from_int(std::int64_t c) const;
  /// BadReduction when the denominator is divisible by l.
  Elem from_rational(const Rational& c) const;
  Elem normalize(Elem a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  /// Minimal l-adic valuation of the coordinates (precision k for zero).
  int valuation(const Elem& a) const;
  /// Residue of a / l^v in F_q, v = valuation(a) < k.
  FqElem unit_residue(const Elem& a) const;
  FqElem residue_of(const Elem& a) const;

 private:
  FieldPtr F_;
  int k_;
  std::int64_t mod_;
};

}  // namespace mtreg
