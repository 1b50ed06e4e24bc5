#include "mtreg/localpair/hilbert.hpp"

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

namespace {

FqElem smallest_generator(const FieldPtr& F) {
  for (std::int64_t i = 1; i < F->q; ++i) {
    FqElem x = FqElem::from_index(F, i);
    if (!x.is_zero() && multiplicative_order(x) == F->q - 1) return x;
  }
  raise(ErrorCode::ShapeError, "no generator of F_q^x");
}

const LocalUnitClass& at(const LocalKummerElem& a, const char* label) {
  auto it = a.find(label);
  if (it == a.end()) raise(ErrorCode::ShapeError, std::string("Kummer element lacks label ") + label);
  return it->second;
}

}  // namespace

TameField::TameField(FieldPtr F_, int p_, FqElem zeta) : F(std::move(F_)), p(p_), g(smallest_generator(F)), zeta_res(std::move(zeta)) {
  if ((F->q - 1) % p != 0) raise(ErrorCode::UnsupportedPlace, "p does not divide q - 1");
  if (zeta_res.is_one() || !zeta_res.pow(p).is_one()) raise(ErrorCode::NotRootOfUnity, "zeta_res must have order p");
}

std::int64_t TameField::unit_class(const FqElem& u) const {
  if (u.is_zero()) raise(ErrorCode::BadReduction, "zero has no unit class");
  const std::int64_t k = (F->q - 1) / p;
  return mu_p_log(u.pow(k), g.pow(k), p);
}

LocalUnitClass unit_product(const LocalUnitClass& a, const LocalUnitClass& b, int p) {
  return {mod_norm(a.v + b.v, p), mod_norm(a.e + b.e, p)};
}

LocalPlace make_local_place(std::string label, const CurveFq& E, int p, int ramification) {
  const FieldPtr& F = E.field();
  if (F->ell == p) raise(ErrorCode::UnsupportedPlace, label + ": residue characteristic equals p");
  if (ramification != 1) raise(ErrorCode::UnsupportedPlace, label + ": ramified places are not supported");
  TorsionBasis B = find_p_torsion_basis(E, p);
  TameField K(F, p, B.zeta_res);
  return LocalPlace{std::move(label), F->ell, F->d, E, B, K};
}

std::int64_t tame_hilbert(const LocalUnitClass& a, const LocalUnitClass& b, const TameField& K) {
  // (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} on residues, raised to (q-1)/p.
  const int p = K.p;
  const std::int64_t va = mod_norm(a.v, p), vb = mod_norm(b.v, p);
  FqElem unit = K.g.pow(mod_norm(a.e * vb - b.e * va, K.F->q - 1));
  if ((va * vb) % 2) unit = -unit;
  return xi(K, unit.pow((K.F->q - 1) / p));
}

std::int64_t xi(const TameField& K, const FqElem& mu) {
  if (!mu.pow(K.p).is_one()) raise(ErrorCode::NotRootOfUnity, to_string(mu) + " is not in mu_p");
  return mu_p_log(mu, K.zeta_res, K.p);
}

std::int64_t local_tate(const LocalKummerElem& a, const LocalKummerElem& b, const TameField& K) {
  return mod_norm(tame_hilbert(at(a, "S"), at(b, "T"), K) - tame_hilbert(at(a, "T"), at(b, "S"), K), K.p);
}

LocalKummerElem kummer_image(const LocalPlace& place, const ECPoint& Q) {
  const TameField& K = place.tame;
  LocalKummerElem out{{"S", {}}, {"T", {}}};
  if (Q.inf) return out;
  // descent_eval is a zeta_res-log; convert to the exponent against g.
  const std::int64_t k = (K.F->q - 1) / K.p;
  const std::int64_t c = mu_p_log(K.zeta_res, K.g.pow(k), K.p);
  out["S"].e = mod_norm(descent_eval(place.curve, place.basis.S, Q, K.zeta_res, K.p) * c, K.p);
  out["T"].e = mod_norm(descent_eval(place.curve, place.basis.T, Q, K.zeta_res, K.p) * c, K.p);
  return out;
}

}  // namespace mtreg
