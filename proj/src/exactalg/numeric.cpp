#include "mtreg/exactalg/numeric.hpp"

#include <climits>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a = mod_norm(a, m);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, m);
    a = mod_mul(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, b = mod_norm(a, m);
  while (b != 0) {
    std::int64_t q = g / b;
    std::int64_t t = g - q * b;
    g = b;
    b = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) raise(ErrorCode::ZeroInversion, "residue is not invertible");
  return mod_norm(x, m);
}

int valuation(const Integer& x, int p) {
  if (x == 0) return -1;
  Integer y = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    y /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& x, int p) {
  if (x == 0) return INT_MAX;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

int valuation(std::int64_t x, int p) {
  if (x == 0) return INT_MAX;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t reduce_integer(const Integer& x, std::int64_t m) {
  Integer r = x % Integer(static_cast<long>(m));
  if (r < 0) r += m;
  return r.get_si();
}

std::int64_t reduce_rational(const Rational& x, std::int64_t m) {
  std::int64_t den = reduce_integer(x.get_den(), m);
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(m));
  if (g != 1) raise(ErrorCode::NotPIntegral, "denominator of " + to_string(x) + " is not invertible");
  return mod_mul(reduce_integer(x.get_num(), m), mod_inv(den, m), m);
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) raise(ErrorCode::SchemaError, "not a rational literal: '" + s + "'");
  if (r.get_den() == 0) raise(ErrorCode::SchemaError, "zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace mtreg
