#include "mtreg/ffec/pairing.hpp"

#include <algorithm>
#include <random>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

namespace {

constexpr int kRetryBudget = 32;
constexpr std::uint64_t kShiftSeed = 0x6d747265u;

// l_{A,B}(Q) / v_{A+B}(Q); sets sum = A + B.
std::optional<FqElem> line_ratio(const CurveFq& E, const ECPoint& A, const ECPoint& B, const ECPoint& Q,
                                 ECPoint& sum) {
  const FieldPtr& F = E.field();
  sum = ec_add(E, A, B);
  if (A.inf || B.inf) return FqElem::from_int(F, 1);
  if (sum.inf) {
    FqElem v = Q.x - A.x;
    if (v.is_zero()) return std::nullopt;
    return v;
  }
  FqElem lambda = (A == B) ? (FqElem::from_int(F, 3) * A.x * A.x + E.a()) / (FqElem::from_int(F, 2) * A.y)
                           : (B.y - A.y) / (B.x - A.x);
  FqElem num = Q.y - A.y - lambda * (Q.x - A.x);
  FqElem den = Q.x - sum.x;
  if (num.is_zero() || den.is_zero()) return std::nullopt;
  return num / den;
}

// Affine points shuffled by a fixed-seed generator.
std::vector<ECPoint> shift_candidates(const CurveFq& E) {
  std::vector<ECPoint> pts = affine_points(E);
  std::mt19937_64 rng(kShiftSeed);
  std::shuffle(pts.begin(), pts.end(), rng);
  if (pts.size() > static_cast<std::size_t>(kRetryBudget)) pts.resize(kRetryBudget);
  return pts;
}

void require_torsion(const CurveFq& E, const ECPoint& P, int p, const char* what) {
  if (!E.on_curve(P)) raise(ErrorCode::ShapeError, std::string(what) + " is not on the curve");
  if (!ec_mul(E, P, p).inf) raise(ErrorCode::ShapeError, std::string(what) + " is not p-torsion");
}

}  // namespace

std::optional<FqElem> miller_value(const CurveFq& E, const ECPoint& P, std::int64_t m, const ECPoint& Q) {
  if (Q.inf || m < 1) return std::nullopt;
  FqElem f = FqElem::from_int(E.field(), 1);
  if (P.inf) return f;
  int top = 62;
  while (!((m >> top) & 1)) --top;
  ECPoint T = P, sum;
  for (int bit = top - 1; bit >= 0; --bit) {
    auto r = line_ratio(E, T, T, Q, sum);
    if (!r) return std::nullopt;
    f = f * f * *r;
    T = sum;
    if ((m >> bit) & 1) {
      r = line_ratio(E, T, P, Q, sum);
      if (!r) return std::nullopt;
      f = f * *r;
      T = sum;
    }
  }
  return f;
}

FqElem weil_pairing(const CurveFq& E, const ECPoint& P, const ECPoint& Q, int p) {
  require_torsion(E, P, p, "first argument");
  require_torsion(E, Q, p, "second argument");
  const FieldPtr& F = E.field();
  if (P.inf || Q.inf) return FqElem::from_int(F, 1);

  // The unshifted normalised form (-1)^p f_P(Q)/f_Q(P) counts as one evaluation; tiny curves
  // often admit a single usable shift.
  std::optional<FqElem> first;
  if (!(P == Q)) {
    auto a = miller_value(E, P, p, Q);
    auto b = miller_value(E, Q, p, P);
    if (a && b) first = (p % 2 ? -(*a / *b) : *a / *b);
  }
  for (const ECPoint& R : shift_candidates(E)) {
    const ECPoint QR = ec_add(E, Q, R), PR = ec_sub(E, P, R), mR = ec_neg(E, R);
    if (QR.inf || PR.inf) continue;
    auto a = miller_value(E, P, p, QR);
    auto b = miller_value(E, P, p, R);
    auto c = miller_value(E, Q, p, PR);
    auto d = miller_value(E, Q, p, mR);
    if (!a || !b || !c || !d) continue;
    FqElem e = (*a / *b) / (*c / *d);
    if (!first) {
      first = e;
      continue;
    }
    if (e != *first)
      raise(ErrorCode::DegenerateEvaluation, "Weil pairing evaluations disagree: " + to_string(e) + " vs " + to_string(*first));
    return e;
  }
  raise(ErrorCode::DegenerateEvaluation, "Weil pairing: fewer than two usable evaluations");
}

TorsionBasis find_p_torsion_basis(const CurveFq& E, int p) {
  std::vector<ECPoint> torsion;
  for (const auto& P : affine_points(E))
    if (ec_mul(E, P, p).inf) torsion.push_back(P);
  if (static_cast<std::int64_t>(torsion.size()) != static_cast<std::int64_t>(p) * p - 1)
    raise(ErrorCode::NotFullTorsion, "E(F_q) has " + std::to_string(torsion.size() + 1) + " points of order dividing p");
  if ((E.field()->q - 1) % p != 0) raise(ErrorCode::NotFullTorsion, "p does not divide q - 1");
  TorsionBasis B;
  B.p = p;
  B.S = torsion.front();
  for (const auto& T : torsion) {
    FqElem e = weil_pairing(E, T, B.S, p);
    if (!e.is_one()) {
      B.T = T;
      B.zeta_res = e;
      return B;
    }
  }
  raise(ErrorCode::NotFullTorsion, "Weil pairing degenerate on E[p]");
}

std::int64_t descent_eval(const CurveFq& E, const ECPoint& S, const ECPoint& Q, const FqElem& zeta_res, int p) {
  require_torsion(E, S, p, "descent point");
  const std::int64_t q = E.field()->q;
  auto cls = [&](const FqElem& v) { return mu_p_log(v.pow((q - 1) / p), zeta_res, p); };

  if (!Q.inf && !(Q == S)) {
    if (auto v = miller_value(E, S, p, Q)) return cls(*v);
  }
  std::optional<std::int64_t> first;
  for (const ECPoint& R : shift_candidates(E)) {
    const ECPoint QR = ec_add(E, Q, R);
    auto a = miller_value(E, S, p, QR);
    auto b = miller_value(E, S, p, R);
    if (!a || !b) continue;
    std::int64_t c = cls(*a / *b);
    if (!first) {
      first = c;
      continue;
    }
    if (c != *first) raise(ErrorCode::DegenerateEvaluation, "descent shifts disagree");
    return c;
  }
  raise(ErrorCode::DegenerateEvaluation, "descent_eval: fewer than two usable auxiliary shifts");
}

}  // namespace mtreg
