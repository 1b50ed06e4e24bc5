#include "mtreg/ffec/fq.hpp"

#include <sstream>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

namespace {

using Vec = std::vector<std::int64_t>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec pmul(const Vec& a, const Vec& b, std::int64_t l) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % l;
  trim(r);
  return r;
}

Vec pmod(Vec a, const Vec& m, std::int64_t l) {
  trim(a);
  const std::int64_t li = mod_inv(m.back(), l);
  while (a.size() >= m.size()) {
    std::int64_t c = mod_mul(a.back(), li, l);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod_norm(a[shift + i] - c * m[i], l);
    trim(a);
  }
  return a;
}

Vec pgcd(Vec a, Vec b, std::int64_t l) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = pmod(a, b, l);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible(const Vec& f, std::int64_t l) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  Vec h = {0, 1};
  for (int i = 1; 2 * i <= d; ++i) {
    Vec base = h, acc = {1};
    for (std::int64_t e = l; e > 0; e >>= 1) {
      if (e & 1) acc = pmod(pmul(acc, base, l), f, l);
      base = pmod(pmul(base, base, l), f, l);
    }
    h = acc;
    Vec t = h;
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = mod_norm(t[1] - 1, l);
    if (pgcd(f, t, l).size() != 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const FqField> FqField::make(std::int64_t ell, int d) {
  if (d < 1) raise(ErrorCode::ShapeError, "field degree must be positive");
  if (d == 1) return make(ell, Vec{0, 1});
  const std::int64_t count = ipow(ell, d);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Vec f(static_cast<std::size_t>(d) + 1, 0);
    std::int64_t r = idx;
    for (int i = d - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = r % ell;
      r /= ell;
    }
    f[static_cast<std::size_t>(d)] = 1;
    if (irreducible(f, ell)) return make(ell, f);
  }
  raise(ErrorCode::ShapeError, "no irreducible polynomial found");
}

std::shared_ptr<const FqField> FqField::make(std::int64_t ell, std::vector<std::int64_t> modulus) {
  if (ell < 2) raise(ErrorCode::ShapeError, "field characteristic must be prime");
  for (std::int64_t k = 2; k * k <= ell; ++k)
    if (ell % k == 0) raise(ErrorCode::ShapeError, "field characteristic must be prime");
  for (auto& c : modulus) c = mod_norm(c, ell);
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1 || !irreducible(modulus, ell))
    raise(ErrorCode::ShapeError, "field modulus is not monic irreducible");
  auto F = std::make_shared<FqField>();
  F->ell = ell;
  F->d = static_cast<int>(modulus.size()) - 1;
  F->q = ipow(ell, F->d);
  F->modulus = std::move(modulus);
  return F;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  return a && b && a->ell == b->ell && a->modulus == b->modulus;
}

FqElem::FqElem(FieldPtr F, std::vector<std::int64_t> coeffs) : F_(std::move(F)) {
  const std::int64_t l = F_->ell;
  for (auto& c : coeffs) c = mod_norm(c, l);
  c_ = pmod(std::move(coeffs), F_->modulus, l);
  c_.resize(static_cast<std::size_t>(F_->d), 0);
}

FqElem FqElem::from_int(FieldPtr F, std::int64_t v) { return FqElem(std::move(F), {v}); }

FqElem FqElem::from_index(FieldPtr F, std::int64_t idx) {
  const int d = F->d;
  const std::int64_t l = F->ell;
  idx = mod_norm(idx, F->q);
  Vec c(static_cast<std::size_t>(d), 0);
  for (int i = d - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = idx % l;
    idx /= l;
  }
  return FqElem(std::move(F), std::move(c));
}

FqElem FqElem::gen(FieldPtr F) { return FqElem(std::move(F), {0, 1}); }

std::int64_t FqElem::index() const {
  std::int64_t r = 0;
  for (auto c : c_) r = r * F_->ell + c;
  return r;
}

bool FqElem::is_zero() const {
  for (auto c : c_)
    if (c != 0) return false;
  return true;
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FqElem FqElem::inv() const {
  if (is_zero()) raise(ErrorCode::ZeroInversion, "inverse of zero in F_q");
  return pow(F_->q - 2);
}

FqElem FqElem::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  FqElem acc = from_int(F_, 1), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

static void check_same(const FqElem& a, const FqElem& b) {
  if (!same_field(a.field(), b.field())) raise(ErrorCode::ShapeError, "F_q field mismatch");
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  Vec c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % a.F_->ell;
  FqElem r;
  r.F_ = a.F_;
  r.c_ = std::move(c);
  return r;
}

FqElem operator-(const FqElem& a) {
  FqElem r = a;
  for (auto& c : r.c_) c = mod_norm(-c, a.F_->ell);
  return r;
}

FqElem operator-(const FqElem& a, const FqElem& b) { return a + (-b); }

FqElem operator*(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  return FqElem(a.F_, pmul(a.c_, b.c_, a.F_->ell));
}

bool operator==(const FqElem& a, const FqElem& b) { return same_field(a.F_, b.F_) && a.c_ == b.c_; }

std::vector<FqElem> all_elements(const FieldPtr& F) {
  std::vector<FqElem> out;
  out.reserve(static_cast<std::size_t>(F->q));
  for (std::int64_t i = 0; i < F->q; ++i) out.push_back(FqElem::from_index(F, i));
  return out;
}

std::int64_t multiplicative_order(const FqElem& x) {
  if (x.is_zero()) raise(ErrorCode::ZeroInversion, "order of zero");
  const std::int64_t n = x.field()->q - 1;
  std::int64_t best = n;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    if (k < best && x.pow(k).is_one()) best = k;
    if (n / k < best && x.pow(n / k).is_one()) best = n / k;
  }
  return best;
}

std::int64_t mu_p_log(const FqElem& x, const FqElem& zeta, int p) {
  FqElem z = FqElem::from_int(x.field(), 1);
  for (int k = 0; k < p; ++k) {
    if (z == x) return k;
    z = z * zeta;
  }
  raise(ErrorCode::NotRootOfUnity, to_string(x) + " is not a power of " + to_string(zeta));
}

std::string to_string(const FqElem& x) {
  if (!x.field()) return "?";
  if (x.field()->d == 1) return std::to_string(x.coeffs()[0]);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) os << (i ? "," : "") << x.coeffs()[i];
  os << "]";
  return os.str();
}

}  // namespace mtreg
