#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mtreg {

using Integer = mpz_class;
using Rational = mpq_class;

std::int64_t ipow(std::int64_t base, int exp);

/// Canonical representative of a modulo m in [0, m).
std::int64_t mod_norm(std::int64_t a, std::int64_t m);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t m);
/// Inverse of a modulo m; throws ZeroInversion when gcd(a, m) != 1.
std::int64_t mod_inv(std::int64_t a, std::int64_t m);

/// p-adic valuation of a nonzero integer (returns -1 for zero).
int valuation(const Integer& x, int p);
/// Valuation of a nonzero rational; for zero returns INT_MAX.
int valuation(const Rational& x, int p);
/// Valuation of a nonzero machine integer; for zero returns INT_MAX.
int valuation(std::int64_t x, int p);

/// Reduce a p-integral rational modulo m = p^k; throws NotPIntegral otherwise.
std::int64_t reduce_rational(const Rational& x, std::int64_t m);
std::int64_t reduce_integer(const Integer& x, std::int64_t m);

std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

}  // namespace mtreg
