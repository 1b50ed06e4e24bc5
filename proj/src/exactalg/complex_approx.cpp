#include "mtreg/exactalg/complex_approx.hpp"

#include <cmath>
#include <numbers>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

namespace {
constexpr double kUnit = 1.1102230246251565e-16;  // 2^-53

double modulus(double re, double im) { return std::hypot(re, im) * (1.0 + 2.0 * kUnit); }
}  // namespace

ComplexApprox::ComplexApprox(double r, double i, double e) : re(r), im(i), err(e) {
  if (!(e >= 0.0)) raise(ErrorCode::PrecisionExhausted, "negative or NaN error bound");
}

ComplexApprox ComplexApprox::from_rational(const Rational& x) {
  double v = x.get_d();
  return {v, 0.0, std::fabs(v) * 2.0 * kUnit};
}

ComplexApprox ComplexApprox::root_of_unity(std::int64_t k, std::int64_t m) {
  std::int64_t kk = mod_norm(k, m);
  double t = 2.0 * std::numbers::pi * static_cast<double>(kk) / static_cast<double>(m);
  return {std::cos(t), std::sin(t), 8.0 * kUnit};
}

double ComplexApprox::abs_upper() const { return modulus(re, im); }

double ComplexApprox::abs_lower() const { return std::hypot(re, im) * (1.0 - 2.0 * kUnit) - err; }

ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
  ComplexApprox r;
  r.re = a.re + b.re;
  r.im = a.im + b.im;
  r.err = a.err + b.err + 2.0 * kUnit * (std::fabs(r.re) + std::fabs(r.im));
  return r;
}

ComplexApprox operator-(const ComplexApprox& a) { return {-a.re, -a.im, a.err}; }

ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) { return a + (-b); }

ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
  ComplexApprox r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  double ma = a.abs_upper();
  double mb = b.abs_upper();
  r.err = ma * b.err + mb * a.err + a.err * b.err + 4.0 * kUnit * ma * mb;
  r.err *= (1.0 + 4.0 * kUnit);
  return r;
}

ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
  double lower = b.abs_lower();
  if (!(lower > 0.0)) raise(ErrorCode::PrecisionExhausted, "division by a value whose error interval contains 0");
  double d = b.re * b.re + b.im * b.im;
  ComplexApprox r;
  r.re = (a.re * b.re + a.im * b.im) / d;
  r.im = (a.im * b.re - a.re * b.im) / d;
  double q = r.abs_upper();
  r.err = (a.err + q * b.err) / lower + 8.0 * kUnit * q;
  r.err *= (1.0 + 4.0 * kUnit);
  return r;
}

ComplexApprox scale(const ComplexApprox& a, const Rational& s) { return a * ComplexApprox::from_rational(s); }

}  // namespace mtreg
