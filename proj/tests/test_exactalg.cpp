#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "expect_error.hpp"
#include "mtreg/exactalg/cyclo.hpp"
#include "mtreg/exactalg/reconstruct.hpp"
#include "mtreg/exactalg/zpm.hpp"

using namespace mtreg;

namespace {

CycloNum random_cyclo(std::mt19937_64& rng, int p, int n) {
  std::int64_t m = ipow(p, n);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(m));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return CycloNum(p, n, c);
}

// Oracle: multiply via the dense matrix of multiplication-by-a and solve a * y = 1 by
// Gaussian elimination over Q, independent of the extended-gcd inversion.
CycloNum oracle_inverse(const CycloNum& a) {
  const int p = a.p(), n = a.n();
  const int d = a.degree();
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, Rational(0)));
  for (int j = 0; j < d; ++j) {
    CycloNum col = a * CycloNum::zeta_power(p, n, j);
    for (int i = 0; i < d; ++i) M[i][j] = col.coeffs()[i];
  }
  M[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (M[piv][c] == 0) ++piv;
    std::swap(M[piv], M[c]);
    for (int i = 0; i < d; ++i) {
      if (i == c || M[i][c] == 0) continue;
      Rational f = M[i][c] / M[c][c];
      for (int j = c; j <= d; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<Rational> y(d);
  for (int i = 0; i < d; ++i) y[i] = M[i][d] / M[i][i];
  return CycloNum(p, n, y);
}

}  // namespace

TEST_CASE("cyclo_invert examples") {
  CycloNum z = CycloNum::zeta_power(3, 1, 1);
  CycloNum zi = cyclo_invert(z);
  CHECK(zi == oracle_inverse(z));
  CHECK(zi.coeffs() == std::vector<Rational>{-1, -1});

  CycloNum one = CycloNum::from_rational(3, 1, 1);
  CHECK(cyclo_invert(one) == one);

  CycloNum a = one - z;
  CycloNum ai = cyclo_invert(a);
  CHECK(ai == oracle_inverse(a));
  CHECK(ai.coeffs() == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

  CHECK_ERROR_CODE(cyclo_invert(CycloNum(3, 1)), ErrorCode::ZeroInversion);
}

TEST_CASE("galois_map examples") {
  CycloNum z = CycloNum::zeta_power(3, 1, 1);
  CHECK(z.galois_map(2).coeffs() == std::vector<Rational>{-1, -1});
  CycloNum five = CycloNum::from_rational(3, 1, 5);
  CHECK(five.galois_map(2) == five);
  CycloNum onez = CycloNum::from_rational(3, 1, 1) + z;
  CHECK(onez.galois_map(2) == -z);
  CHECK_ERROR_CODE(z.galois_map(3), ErrorCode::BadExponent);
  CHECK_ERROR_CODE(CycloNum::zeta_power(3, 2, 1).galois_map(6), ErrorCode::BadExponent);
}

TEST_CASE("cyclotomic field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    for (int trial = 0; trial < 40; ++trial) {
      CycloNum a = random_cyclo(rng, p, n), b = random_cyclo(rng, p, n), c = random_cyclo(rng, p, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK(a * cyclo_invert(a) == CycloNum::from_rational(p, n, 1));
        CHECK(cyclo_invert(a) == oracle_inverse(a));
      }
      std::int64_t m = ipow(p, n);
      for (std::int64_t k = 1; k < m; ++k) {
        if (k % p == 0) continue;
        CHECK(a.galois_map(k) * b.galois_map(k) == (a * b).galois_map(k));
        CHECK((a + b).galois_map(k) == a.galois_map(k) + b.galois_map(k));
        for (std::int64_t k2 : {std::int64_t{1}, std::int64_t{2}, m - 1}) {
          if (k2 % p == 0) continue;
          CHECK(a.galois_map(k).galois_map(k2) == a.galois_map(mod_norm(k * k2, m)));
        }
      }
    }
  }
}

TEST_CASE("cyclotomic embedding agrees with direct complex evaluation") {
  std::mt19937_64 rng(5);
  CycloNum a = random_cyclo(rng, 3, 2);
  for (std::int64_t j : {1, 2, 4, 5, 7, 8}) {
    ComplexApprox v = a.embed(j);
    std::complex<double> direct = 0;
    // Value of the unreduced representative: same number, different arithmetic path.
    for (int i = 0; i < a.degree(); ++i)
      direct += a.coeffs()[i].get_d() * std::polar(1.0, 2 * M_PI * double(i * j) / 9.0);
    CHECK(std::abs(direct - std::complex<double>(v.re, v.im)) <= v.err + 1e-15);
  }
}

TEST_CASE("rational_reconstruct examples") {
  CHECK(rational_reconstruct(ComplexApprox(0.333333333, 0.0, 1e-9), 1e-6, Integer(1000000)) == Rational(1, 3));
  CHECK(rational_reconstruct(ComplexApprox(2.0, 0.0, 0.0), 1e-9, Integer(10)) == Rational(2));
  CHECK_ERROR_CODE(rational_reconstruct(ComplexApprox(1.6180339887, 0.0, 0.0), 1e-12, Integer(1000)),
                   ErrorCode::NoConvergent);
  CHECK_ERROR_CODE(rational_reconstruct(ComplexApprox(1.0, 0.5, 0.0), 1e-6, Integer(10)), ErrorCode::NotReal);
  CHECK_ERROR_CODE(rational_reconstruct(ComplexApprox(1.0, 0.0, 1e-3), 1e-6, Integer(10)),
                   ErrorCode::PrecisionExhausted);
}

TEST_CASE("golden ratio convergents all miss by more than 1e-12") {
  // Oracle for the NoConvergent example: enumerate Fibonacci convergents directly.
  long a = 1, b = 1;
  while (b <= 1000) {
    double q = double(a + b) / double(b);
    CHECK(std::fabs(1.6180339887 - q) > 1e-12);
    long t = a + b;
    a = b;
    b = t;
  }
}

TEST_CASE("rational_reconstruct is exact on small-denominator rationals perturbed below tol/2") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 300);
  std::uniform_real_distribution<double> noise(-0.49e-8, 0.49e-8);
  for (int i = 0; i < 500; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    double x = q.get_d() + noise(rng);
    CHECK(rational_reconstruct(ComplexApprox(x, 0.0, 0.0), 1e-8, Integer(300)) == q);
  }
}

TEST_CASE("ComplexApprox error bound is conservative") {
  using Big = boost::multiprecision::cpp_bin_float_100;
  struct BigC {
    Big re, im;
  };
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  std::uniform_int_distribution<int> op(0, 3);
  int checked = 0;
  for (int chain = 0; chain < 1000; ++chain) {
    double r0 = val(rng), i0 = val(rng);
    ComplexApprox x(r0, i0, 0.0);
    BigC X{Big(r0), Big(i0)};
    for (int step = 0; step < 10; ++step) {
      double r1 = val(rng), i1 = val(rng);
      ComplexApprox y(r1, i1, 0.0);
      BigC Y{Big(r1), Big(i1)};
      switch (op(rng)) {
        case 0:
          x = x + y;
          X = {X.re + Y.re, X.im + Y.im};
          break;
        case 1:
          x = x - y;
          X = {X.re - Y.re, X.im - Y.im};
          break;
        case 2:
          x = x * y;
          X = {X.re * Y.re - X.im * Y.im, X.re * Y.im + X.im * Y.re};
          break;
        default: {
          if (!y.certainly_nonzero()) continue;
          x = x / y;
          Big d = Y.re * Y.re + Y.im * Y.im;
          X = {(X.re * Y.re + X.im * Y.im) / d, (X.im * Y.re - X.re * Y.im) / d};
        }
      }
      Big dr = X.re - Big(x.re), di = X.im - Big(x.im);
      Big dist = sqrt(dr * dr + di * di);
      CHECK(dist <= Big(x.err));
      ++checked;
    }
  }
  CHECK(checked >= 9000);
}

TEST_CASE("Smith-form solve over Z/p^M") {
  ZpmRing R(3, 4);
  ZpmMatrix A(2, 3);
  A(0, 0) = 3;
  A(0, 1) = 6;
  A(0, 2) = 9;
  A(1, 0) = 1;
  A(1, 1) = 2;
  A(1, 2) = 0;
  std::vector<std::int64_t> b{12, 4};
  auto x = solve(R, A, b);
  REQUIRE(x.has_value());
  CHECK(apply(R, A, *x) == b);
  auto x1 = solve(R, A, b, 1);
  REQUIRE(x1.has_value());
  CHECK(apply(R, A, *x1) == b);
  CHECK_FALSE(solve(R, A, std::vector<std::int64_t>{1, 0}).has_value());

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> d(0, R.mod - 1);
  for (int t = 0; t < 100; ++t) {
    ZpmMatrix B(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) B(i, j) = (t % 2) ? R.mul(3, d(rng)) : d(rng);
    std::vector<std::int64_t> x0(5);
    for (auto& v : x0) v = d(rng);
    auto rhs = apply(R, B, x0);
    auto sol = solve(R, B, rhs);
    REQUIRE(sol.has_value());
    CHECK(apply(R, B, *sol) == rhs);
    SmithForm S = smith_form(R, B);
    CHECK(is_invertible(R, S.U));
    CHECK(is_invertible(R, S.V));
  }
}
