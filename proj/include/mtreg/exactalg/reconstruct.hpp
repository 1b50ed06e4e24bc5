#pragma once

#include "mtreg/exactalg/complex_approx.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

struct Reconstruction {
  Rational value;
  /// tol minus the worst-case distance |re(x) - value| + err; positive on success.
  double margin = 0.0;
};

/// First continued-fraction convergent q of re(x) with den(q) <= max_den and |re(x) - q| <= tol.
/// Throws NotReal, NoConvergent, or PrecisionExhausted when the error bound straddles tol.
Reconstruction reconstruct_with_margin(const ComplexApprox& x, double tol, const Integer& max_den);

Rational rational_reconstruct(const ComplexApprox& x, double tol, const Integer& max_den);

}  // namespace mtreg
