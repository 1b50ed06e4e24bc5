#include "mtreg/ffec/curve.hpp"

#include <algorithm>
#include <map>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

bool operator==(const ECPoint& a, const ECPoint& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return a.x == b.x && a.y == b.y;
}

bool operator<(const ECPoint& a, const ECPoint& b) {
  if (a.inf || b.inf) return a.inf && !b.inf;
  if (a.x.index() != b.x.index()) return a.x.index() < b.x.index();
  return a.y.index() < b.y.index();
}

CurveFq::CurveFq(FqElem a, FqElem b) : a_(std::move(a)), b_(std::move(b)) {
  const FieldPtr& F = a_.field();
  if (F->ell == 2 || F->ell == 3) raise(ErrorCode::ShapeError, "short Weierstrass form needs characteristic > 3");
  FqElem disc = FqElem::from_int(F, 4) * a_ * a_ * a_ + FqElem::from_int(F, 27) * b_ * b_;
  if (disc.is_zero()) raise(ErrorCode::ShapeError, "singular curve");
}

bool CurveFq::on_curve(const ECPoint& P) const {
  if (P.inf) return true;
  return P.y * P.y == P.x * P.x * P.x + a_ * P.x + b_;
}

ECPoint CurveFq::point(const FqElem& x, const FqElem& y) const {
  ECPoint P = ECPoint::affine(x, y);
  if (!on_curve(P)) raise(ErrorCode::ShapeError, "point (" + to_string(x) + "," + to_string(y) + ") is not on the curve");
  return P;
}

ECPoint CurveFq::point(std::int64_t x, std::int64_t y) const {
  return point(FqElem::from_int(field(), x), FqElem::from_int(field(), y));
}

ECPoint ec_neg(const CurveFq&, const ECPoint& P) {
  if (P.inf) return P;
  return ECPoint::affine(P.x, -P.y);
}

ECPoint ec_add(const CurveFq& E, const ECPoint& P, const ECPoint& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  FqElem lambda;
  if (P.x == Q.x) {
    if ((P.y + Q.y).is_zero()) return ECPoint::infinity();
    lambda = (FqElem::from_int(E.field(), 3) * P.x * P.x + E.a()) / (FqElem::from_int(E.field(), 2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  FqElem x3 = lambda * lambda - P.x - Q.x;
  FqElem y3 = lambda * (P.x - x3) - P.y;
  return ECPoint::affine(x3, y3);
}

ECPoint ec_sub(const CurveFq& E, const ECPoint& P, const ECPoint& Q) { return ec_add(E, P, ec_neg(E, Q)); }

ECPoint ec_mul(const CurveFq& E, const ECPoint& P, std::int64_t k) {
  if (k < 0) return ec_mul(E, ec_neg(E, P), -k);
  ECPoint acc = ECPoint::infinity(), base = P;
  for (; k > 0; k >>= 1) {
    if (k & 1) acc = ec_add(E, acc, base);
    base = ec_add(E, base, base);
  }
  return acc;
}

ECPoint ec_frobenius(const ECPoint& P) {
  if (P.inf) return P;
  return ECPoint::affine(P.x.frobenius(), P.y.frobenius());
}

std::vector<ECPoint> affine_points(const CurveFq& E) {
  const auto elems = all_elements(E.field());
  std::map<std::int64_t, std::vector<FqElem>> roots;
  for (const auto& y : elems) roots[(y * y).index()].push_back(y);
  std::vector<ECPoint> out;
  for (const auto& x : elems) {
    FqElem rhs = x * x * x + E.a() * x + E.b();
    auto it = roots.find(rhs.index());
    if (it == roots.end()) continue;
    for (const auto& y : it->second) out.push_back(ECPoint::affine(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t point_count(const CurveFq& E) { return static_cast<std::int64_t>(affine_points(E).size()) + 1; }

std::int64_t point_order(const CurveFq& E, const ECPoint& P) {
  std::int64_t k = 1;
  for (ECPoint R = P; !R.inf; R = ec_add(E, R, P)) ++k;
  return P.inf ? 1 : k;
}

std::string to_string(const ECPoint& P) {
  if (P.inf) return "inf";
  return "(" + to_string(P.x) + "," + to_string(P.y) + ")";
}

}  // namespace mtreg
