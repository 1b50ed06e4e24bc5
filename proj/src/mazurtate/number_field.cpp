#include "mtreg/mazurtate/number_field.hpp"

#include <algorithm>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

NumberFieldData::NumberFieldData(std::vector<Rational> poly, std::vector<std::vector<Rational>> sigma)
    : d_(static_cast<int>(poly.size()) - 1), poly_(std::move(poly)), sigma_(std::move(sigma)) {
  if (d_ < 1 || poly_.back() != 1) raise(ErrorCode::ShapeError, "number field polynomial must be monic of positive degree");
  if (static_cast<int>(sigma_.size()) != d_) raise(ErrorCode::ShapeError, "sigma matrix has wrong size");
  for (const auto& row : sigma_)
    if (static_cast<int>(row.size()) != d_) raise(ErrorCode::ShapeError, "sigma matrix has wrong size");
  if (d_ == 1) {
    if (sigma_[0][0] != 1) raise(ErrorCode::ShapeError, "sigma must fix Q");
    return;
  }
  // Column k must be sigma(theta)^k, sigma(theta) must be a root, and sigma has order d.
  FElem st(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) st[static_cast<std::size_t>(i)] = sigma_[static_cast<std::size_t>(i)][1];
  FElem pw = from_rational(1), val = from_rational(0);
  for (int k = 0; k <= d_; ++k) {
    if (k < d_)
      for (int i = 0; i < d_; ++i)
        if (sigma_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != pw[static_cast<std::size_t>(i)])
          raise(ErrorCode::ShapeError, "sigma is not multiplicative on the power basis");
    FElem term = pw;
    for (auto& c : term) c *= poly_[static_cast<std::size_t>(k)];
    val = add(val, term);
    pw = mul(pw, st);
  }
  if (val != from_rational(0)) raise(ErrorCode::ShapeError, "sigma(theta) is not a root of the defining polynomial");
  FElem th(static_cast<std::size_t>(d_), 0);
  th[1] = 1;
  FElem cur = th;
  for (int k = 1; k <= d_; ++k) {
    cur = apply_sigma(cur);
    if ((cur == th) != (k == d_)) raise(ErrorCode::ShapeError, "sigma does not have order equal to the degree");
  }
}

FElem NumberFieldData::from_rational(const Rational& c) const {
  FElem r(static_cast<std::size_t>(d_), 0);
  r[0] = c;
  return r;
}

FElem NumberFieldData::add(const FElem& a, const FElem& b) const {
  FElem r(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
  return r;
}

FElem NumberFieldData::mul(const FElem& a, const FElem& b) const {
  std::vector<Rational> prod(static_cast<std::size_t>(2 * d_ - 1), 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    Rational c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= d_; ++i) prod[static_cast<std::size_t>(k - d_ + i)] -= c * poly_[static_cast<std::size_t>(i)];
  }
  prod.resize(static_cast<std::size_t>(d_));
  return prod;
}

FElem NumberFieldData::apply_sigma(const FElem& a) const {
  FElem r(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k)
      r[static_cast<std::size_t>(i)] += sigma_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)];
  return r;
}

FElem NumberFieldData::act(std::int64_t k, const FElem& a) const {
  FElem r = a;
  for (std::int64_t i = 0; i < mod_norm(k, d_); ++i) r = apply_sigma(r);
  return r;
}

GaloisRing::GaloisRing(FieldPtr residue, int k) : F_(std::move(residue)), k_(k) {
  if (k < 1) raise(ErrorCode::ShapeError, "adic precision must be positive");
  mod_ = ipow(F_->ell, k);
}

GaloisRing::Elem GaloisRing::normalize(Elem a) const {
  const int d = F_->d;
  for (auto& c : a) c = mod_norm(c, mod_);
  // Reduce modulo the monic integer lift of the residue modulus.
  while (static_cast<int>(a.size()) > d) {
    std::int64_t c = a.back();
    std::size_t shift = a.size() - 1 - static_cast<std::size_t>(d);
    for (int i = 0; i <= d; ++i)
      a[shift + static_cast<std::size_t>(i)] = mod_norm(a[shift + static_cast<std::size_t>(i)] - mod_mul(c, F_->modulus[static_cast<std::size_t>(i)], mod_), mod_);
    a.pop_back();
  }
  a.resize(static_cast<std::size_t>(d), 0);
  return a;
}

GaloisRing::Elem GaloisRing::from_int(std::int64_t c) const { return normalize({c}); }

GaloisRing::Elem GaloisRing::from_rational(const Rational& c) const {
  Integer den = c.get_den();
  if (den % Integer(static_cast<long>(F_->ell)) == 0)
    raise(ErrorCode::BadReduction, "denominator " + den.get_str() + " is divisible by " + std::to_string(F_->ell));
  return from_int(reduce_rational(c, mod_));
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_norm(a[i] + b[i], mod_);
  return r;
}

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const {
  Elem r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod_norm(r[i + j] + mod_mul(a[i], b[j], mod_), mod_);
  return normalize(std::move(r));
}

bool GaloisRing::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

int GaloisRing::valuation(const Elem& a) const {
  int v = k_;
  for (auto c : a)
    if (c != 0) v = std::min(v, mtreg::valuation(c, static_cast<int>(F_->ell)));
  return v;
}

FqElem GaloisRing::residue_of(const Elem& a) const { return FqElem(F_, a); }

FqElem GaloisRing::unit_residue(const Elem& a) const {
  const int v = valuation(a);
  if (v >= k_) raise(ErrorCode::BadReduction, "value vanishes to the available precision");
  const std::int64_t lv = ipow(F_->ell, v);
  Elem u(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) u[i] = (a[i] / lv) % F_->ell;
  return FqElem(F_, u);
}

}  // namespace mtreg
