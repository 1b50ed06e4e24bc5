#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtreg/exactalg/complex_approx.hpp"
#include "mtreg/exactalg/cyclo.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/exactalg/zpm.hpp"

namespace mtreg {

/// Cyclic group of order p^n with generator sigma; element sigma^i is stored as i.
/// n = 0 (the trivial group) is allowed so that quotients Gamma_0 are representable.
class GroupData {
 public:
  GroupData() = default;
  GroupData(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  std::int64_t order() const { return order_; }
  /// |J_r| = p^{n-r}.
  std::int64_t sub_order(int r) const;
  /// Gamma_r = G / J_r.
  GroupData quotient(int r) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return mod_norm(a + b, order_); }
  std::int64_t inv(std::int64_t a) const { return mod_norm(-a, order_); }

  friend bool operator==(const GroupData& a, const GroupData& b) { return a.p_ == b.p_ && a.n_ == b.n_; }

 private:
  int p_ = 3;
  int n_ = 1;
  std::int64_t order_ = 3;
};

template <class D>
struct CoeffTraits;

template <>
struct CoeffTraits<Integer> {
  static Integer zero_like(const Integer&) { return 0; }
  static Integer one_like(const Integer&) { return 1; }
};
template <>
struct CoeffTraits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
};
template <>
struct CoeffTraits<ResidueInt> {
  static ResidueInt zero_like(const ResidueInt& x) { return {0, x.modulus}; }
  static ResidueInt one_like(const ResidueInt& x) { return {1, x.modulus}; }
};
template <>
struct CoeffTraits<CycloNum> {
  static CycloNum zero_like(const CycloNum& x) { return CycloNum(x.p(), x.n()); }
  static CycloNum one_like(const CycloNum& x) { return CycloNum::from_rational(x.p(), x.n(), 1); }
};
template <>
struct CoeffTraits<ComplexApprox> {
  static ComplexApprox zero_like(const ComplexApprox&) { return {0.0, 0.0, 0.0}; }
  static ComplexApprox one_like(const ComplexApprox&) { return {1.0, 0.0, 0.0}; }
};

/// Element of D[G]; coefficient of sigma^i at index i.
template <class D>
class GroupRingElem {
 public:
  GroupRingElem(GroupData g, std::vector<D> coeffs) : g_(g), c_(std::move(coeffs)) {
    if (static_cast<std::int64_t>(c_.size()) != g_.order())
      throw std::invalid_argument("GroupRingElem: coefficient count differs from |G|");
  }

  static GroupRingElem zero(GroupData g, const D& proto) {
    return GroupRingElem(g, std::vector<D>(static_cast<std::size_t>(g.order()), CoeffTraits<D>::zero_like(proto)));
  }
  /// sigma^k (scaled by the unit of the domain).
  static GroupRingElem basis(GroupData g, std::int64_t k, const D& proto) {
    GroupRingElem r = zero(g, proto);
    r.c_[static_cast<std::size_t>(mod_norm(k, g.order()))] = CoeffTraits<D>::one_like(proto);
    return r;
  }
  static GroupRingElem one(GroupData g, const D& proto) { return basis(g, 0, proto); }

  const GroupData& group() const { return g_; }
  const std::vector<D>& coeffs() const { return c_; }
  const D& operator[](std::int64_t i) const { return c_[static_cast<std::size_t>(i)]; }
  D& operator[](std::int64_t i) { return c_[static_cast<std::size_t>(i)]; }

  D augmentation() const {
    D s = CoeffTraits<D>::zero_like(c_[0]);
    for (const auto& x : c_) s = s + x;
    return s;
  }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  GroupRingElem operator-() const {
    GroupRingElem r = *this;
    for (auto& x : r.c_) x = CoeffTraits<D>::zero_like(x) - x;
    return r;
  }
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    a.check(b);
    GroupRingElem r = zero(a.g_, a.c_[0]);
    const std::int64_t ord = a.g_.order();
    for (std::int64_t i = 0; i < ord; ++i)
      for (std::int64_t j = 0; j < ord; ++j) {
        std::size_t k = static_cast<std::size_t>((i + j) % ord);
        r.c_[k] = r.c_[k] + a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      }
    return r;
  }
  friend GroupRingElem operator*(const D& s, GroupRingElem a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return a.g_ == b.g_ && a.c_ == b.c_; }

 private:
  void check(const GroupRingElem& o) const {
    if (!(g_ == o.g_)) throw std::invalid_argument("GroupRingElem: group mismatch");
  }

  GroupData g_;
  std::vector<D> c_;
};

using IntElem = GroupRingElem<Integer>;
using RatElem = GroupRingElem<Rational>;

/// rho_r : D[G] -> D[Gamma_r], summing coefficients over cosets of J_r.
template <class D>
GroupRingElem<D> project_rho(const GroupRingElem<D>& x, int r) {
  const GroupData& g = x.group();
  if (r < 0 || r > g.n()) throw std::invalid_argument("project_rho: level out of range");
  GroupData q = g.quotient(r);
  GroupRingElem<D> out = GroupRingElem<D>::zero(q, x[0]);
  for (std::int64_t i = 0; i < g.order(); ++i) out[i % q.order()] = out[i % q.order()] + x[i];
  return out;
}

/// Tr_{J_r} = sum of sigma^{k p^r}.
IntElem trace_J(const GroupData& g, int r);
/// Sum over coset representatives sigma^{k p^s}, 0 <= k < p^{r-s}, of J_s / J_r (s <= r).
IntElem trace_relative(const GroupData& g, int s, int r);
/// sigma^{p^r} - 1.
IntElem sigma_pow_minus_one(const GroupData& g, int r);

RatElem to_rational(const IntElem& x);
/// Reduction of p-integral coefficients modulo R.mod (throws NotPIntegral).
std::vector<std::int64_t> reduce_coeffs(const RatElem& x, const ZpmRing& R);
std::vector<std::int64_t> reduce_coeffs(const IntElem& x, const ZpmRing& R);

/// |G| x |G| matrix of multiplication by x over Z/p^M: column j = coefficients of x * sigma^j.
ZpmMatrix multiplication_matrix(const std::vector<std::int64_t>& x, const GroupData& g, const ZpmRing& R);

/// Inverse of a unit of Z/p^M[G]; throws ZeroInversion for non-units.
std::vector<std::int64_t> invert_unit(const std::vector<std::int64_t>& x, const GroupData& g, const ZpmRing& R);

std::string to_string(const IntElem& x);
std::string to_string(const RatElem& x);

/// Class of c (sigma^{p^l} - 1) in I(J_l)/I(J_l)^2, i.e. an element of Z/p^{n-l}.
class AugClass {
 public:
  AugClass(GroupData g, int level, const Integer& exponent);

  /// Class of h - 1 for h = sigma^k in J_l.
  static AugClass of_element(GroupData g, int level, std::int64_t k);

  const GroupData& group() const { return g_; }
  int level() const { return level_; }
  std::int64_t exponent() const { return c_; }
  std::int64_t modulus() const { return g_.sub_order(level_); }

  friend AugClass operator+(const AugClass& a, const AugClass& b);
  friend AugClass operator-(const AugClass& a, const AugClass& b);
  friend AugClass operator-(const AugClass& a);
  friend AugClass operator*(const Integer& s, const AugClass& a);
  friend bool operator==(const AugClass& a, const AugClass& b);

 private:
  GroupData g_;
  int level_;
  std::int64_t c_;
};

}  // namespace mtreg
