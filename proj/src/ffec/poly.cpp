#include "mtreg/ffec/poly.hpp"

#include <algorithm>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

FqPoly::FqPoly(FieldPtr F, std::vector<FqElem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) { trim(); }

void FqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::from_ints(FieldPtr F, const std::vector<std::int64_t>& c) {
  std::vector<FqElem> e;
  for (auto v : c) e.push_back(FqElem::from_int(F, v));
  return FqPoly(F, std::move(e));
}

FqPoly FqPoly::constant(const FqElem& c) { return FqPoly(c.field(), {c}); }

FqPoly FqPoly::x(FieldPtr F) { return from_ints(std::move(F), {0, 1}); }

FqElem FqPoly::lead() const {
  if (c_.empty()) return FqElem::from_int(F_, 0);
  return c_.back();
}

FqElem FqPoly::eval(const FqElem& t) const {
  FqElem acc = FqElem::from_int(F_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  FqElem li = c_.back().inv();
  std::vector<FqElem> c;
  for (const auto& x : c_) c.push_back(x * li);
  return FqPoly(F_, std::move(c));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), FqElem::from_int(a.F_, 0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
  return FqPoly(a.F_, std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), FqElem::from_int(a.F_, 0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
  return FqPoly(a.F_, std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return FqPoly(a.F_, {});
  std::vector<FqElem> c(a.c_.size() + b.c_.size() - 1, FqElem::from_int(a.F_, 0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return FqPoly(a.F_, std::move(c));
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroInversion, "polynomial division by zero");
  std::vector<FqElem> r = a.coeffs();
  const int db = b.degree();
  std::vector<FqElem> q(r.size() > b.coeffs().size() ? r.size() - b.coeffs().size() + 1 : 1,
                        FqElem::from_int(a.field(), 0));
  FqElem li = b.lead().inv();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    FqElem c = r[static_cast<std::size_t>(k)] * li;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(k - db + i)];
      slot = slot - c * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {FqPoly(a.field(), std::move(q)), FqPoly(a.field(), std::move(r))};
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqPoly powmod(const FqPoly& base, std::int64_t e, const FqPoly& m) {
  FqPoly acc = divmod(FqPoly::from_ints(m.field(), {1}), m).second;
  FqPoly b = divmod(base, m).second;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = divmod(acc * b, m).second;
    b = divmod(b * b, m).second;
  }
  return acc;
}

namespace {

// Equal-degree splitting of a squarefree product of distinct linear factors.
void split_linear(const FqPoly& h, std::vector<FqElem>& out) {
  if (h.degree() < 1) return;
  if (h.degree() == 1) {
    out.push_back(-(h.coeffs()[0] / h.coeffs()[1]));
    return;
  }
  const FieldPtr& F = h.field();
  if (F->ell == 2) {
    for (const auto& t : all_elements(F))
      if (h.eval(t).is_zero()) out.push_back(t);
    return;
  }
  const FqPoly one = FqPoly::from_ints(F, {1});
  for (std::int64_t i = 0; i < F->q; ++i) {
    FqPoly shifted = FqPoly::x(F) + FqPoly::constant(FqElem::from_index(F, i));
    FqPoly g = poly_gcd(powmod(shifted, (F->q - 1) / 2, h) - one, h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_linear(g, out);
      split_linear(divmod(h, g).first, out);
      return;
    }
  }
  raise(ErrorCode::ShapeError, "root splitting failed");
}

}  // namespace

std::vector<FqElem> ff_roots(const FqPoly& f) {
  if (f.degree() < 1) raise(ErrorCode::ShapeError, "ff_roots needs a polynomial of positive degree");
  const FieldPtr& F = f.field();
  FqPoly xq = powmod(FqPoly::x(F), F->q, f);
  FqPoly h = poly_gcd(f, xq - FqPoly::x(F));
  std::vector<FqElem> distinct;
  split_linear(h, distinct);
  std::vector<FqElem> out;
  for (const auto& r : distinct) {
    FqPoly lin = FqPoly::x(F) - FqPoly::constant(r);
    FqPoly rest = f;
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      rest = q;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mtreg
