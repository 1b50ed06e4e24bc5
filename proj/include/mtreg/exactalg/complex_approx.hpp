#pragma once

#include <cstdint>

#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

/// A complex double with a declared absolute error bound on |value - true value|.
/// Arithmetic propagates the bound by first-order interval rules plus rounding slack.
struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;

  ComplexApprox() = default;
  ComplexApprox(double r, double i, double e = 0.0);

  static ComplexApprox from_rational(const Rational& x);
  /// exp(2*pi*i*k/m).
  static ComplexApprox root_of_unity(std::int64_t k, std::int64_t m);

  /// Upper bound on the modulus of the true value's approximation.
  double abs_upper() const;
  /// Lower bound on the modulus of the true value (may be negative).
  double abs_lower() const;
  bool certainly_nonzero() const { return abs_lower() > 0.0; }
};

ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox operator-(const ComplexApprox& a);
ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b);
/// Throws PrecisionExhausted when the divisor's interval contains 0.
ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox scale(const ComplexApprox& a, const Rational& s);

}  // namespace mtreg
