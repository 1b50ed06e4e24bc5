#include "mtreg/exactalg/cyclo.hpp"

#include <numeric>
#include <stdexcept>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    trim(r);
  }
}

QPoly cyclotomic(int p, int n) {
  if (n == 0) return {Rational(-1), Rational(1)};
  std::int64_t step = ipow(p, n - 1);
  QPoly phi(static_cast<std::size_t>(step * (p - 1) + 1), Rational(0));
  for (int k = 0; k < p; ++k) phi[static_cast<std::size_t>(k * step)] = 1;
  return phi;
}

}  // namespace

CycloNum::CycloNum(int p, int n) : p_(p), n_(n), m_(ipow(p, n)) {
  if (p < 2 || n < 0) throw std::invalid_argument("CycloNum: bad field parameters");
  std::int64_t deg = n == 0 ? 1 : ipow(p, n - 1) * (p - 1);
  c_.assign(static_cast<std::size_t>(deg), Rational(0));
}

CycloNum::CycloNum(int p, int n, const std::vector<Rational>& coeffs) : CycloNum(p, n) {
  // Fold modulo x^m - 1, then reduce by the cyclotomic polynomial from the top.
  std::vector<Rational> folded(static_cast<std::size_t>(m_), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % static_cast<std::size_t>(m_)] += coeffs[i];
  std::int64_t deg = static_cast<std::int64_t>(c_.size());
  if (n_ == 0) {
    c_[0] = folded[0];
    return;
  }
  std::int64_t step = ipow(p_, n_ - 1);
  for (std::int64_t i = m_ - 1; i >= deg; --i) {
    Rational c = folded[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    folded[static_cast<std::size_t>(i)] = 0;
    for (int k = 0; k + 1 < p_; ++k) folded[static_cast<std::size_t>(i - deg + k * step)] -= c;
  }
  for (std::int64_t i = 0; i < deg; ++i) c_[static_cast<std::size_t>(i)] = folded[static_cast<std::size_t>(i)];
}

CycloNum CycloNum::from_rational(int p, int n, const Rational& x) {
  CycloNum r(p, n);
  r.c_[0] = x;
  return r;
}

CycloNum CycloNum::zeta_power(int p, int n, std::int64_t k) {
  std::int64_t m = ipow(p, n);
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  c[static_cast<std::size_t>(mod_norm(k, m))] = 1;
  return CycloNum(p, n, c);
}

bool CycloNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloNum CycloNum::galois_map(std::int64_t k) const {
  if (std::gcd(mod_norm(k, p_), static_cast<std::int64_t>(p_)) != 1)
    raise(ErrorCode::BadExponent, "galois_map exponent " + std::to_string(k) + " is divisible by p");
  std::vector<Rational> out(static_cast<std::size_t>(m_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[static_cast<std::size_t>(mod_norm(static_cast<std::int64_t>(i) * k, m_))] += c_[i];
  return CycloNum(p_, n_, out);
}

ComplexApprox CycloNum::embed(std::int64_t j_idx) const {
  ComplexApprox acc(0.0, 0.0, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    acc = acc + ComplexApprox::from_rational(c_[i]) *
                    ComplexApprox::root_of_unity(static_cast<std::int64_t>(i) * j_idx, m_);
  }
  return acc;
}

void CycloNum::check_same(const CycloNum& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("CycloNum: mixing different cyclotomic fields");
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  check_same(o);
  std::vector<Rational> prod(c_.size() * 2, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = CycloNum(p_, n_, prod);
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.p_ == b.p_ && a.n_ == b.n_ && a.c_ == b.c_;
}

CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }

CycloNum operator*(const Rational& s, CycloNum a) {
  return a *= CycloNum::from_rational(a.p(), a.n(), s);
}

CycloNum cyclo_invert(const CycloNum& a) {
  if (a.is_zero()) raise(ErrorCode::ZeroInversion, "inverse of zero in the cyclotomic field");
  // Extended Euclid: track s with s*a = r (mod phi).
  QPoly r0 = cyclotomic(a.p(), a.n());
  QPoly r1 = a.coeffs();
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since phi is irreducible.
  Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return CycloNum(a.p(), a.n(), s1);
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * cyclo_invert(b); }

CycloNum pow(const CycloNum& a, int e) {
  CycloNum r = CycloNum::from_rational(a.p(), a.n(), Rational(1));
  if (e < 0) return pow(cyclo_invert(a), -e);
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

}  // namespace mtreg
