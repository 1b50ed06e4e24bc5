#include "mtreg/exactalg/reconstruct.hpp"

#include <cmath>
#include <sstream>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

Reconstruction reconstruct_with_margin(const ComplexApprox& x, double tol, const Integer& max_den) {
  double im = std::fabs(x.im);
  if (im - x.err > tol) raise(ErrorCode::NotReal, "imaginary part exceeds tolerance");
  if (im + x.err > tol) raise(ErrorCode::PrecisionExhausted, "imaginary part straddles the tolerance");

  const Rational target(x.re);  // exact binary value of the double
  const Rational tol_q(tol);
  const Rational err_q(x.err);

  // Convergents h_k / k_k of the continued fraction of target.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Rational rest = target;
  for (;;) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_den) break;
    Rational q(h, k);
    q.canonicalize();
    Rational dist = abs(target - q);
    if (dist + err_q <= tol_q) {
      Reconstruction out;
      out.value = q;
      out.margin = tol - (dist.get_d() + x.err);
      return out;
    }
    if (dist - err_q <= tol_q) {
      std::ostringstream os;
      os << "convergent " << q.get_str() << " is within tolerance only inside the error bound";
      raise(ErrorCode::PrecisionExhausted, os.str());
    }
    Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  std::ostringstream os;
  os << "no convergent of " << x.re << " within " << tol << " with denominator <= " << max_den.get_str();
  raise(ErrorCode::NoConvergent, os.str());
}

Rational rational_reconstruct(const ComplexApprox& x, double tol, const Integer& max_den) {
  return reconstruct_with_margin(x, tol, max_den).value;
}

}  // namespace mtreg
