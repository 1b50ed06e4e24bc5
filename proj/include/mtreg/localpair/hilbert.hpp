#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mtreg/ffec/pairing.hpp"

namespace mtreg {

/// Residue data needed for tame symbols at an unramified place prime to p.
struct TameField {
  FieldPtr F;
  int p = 3;
  FqElem g;         // smallest generator of F_q^x in canonical order
  FqElem zeta_res;  // order p

  TameField(FieldPtr F, int p, FqElem zeta_res);
  /// Exponent of u against g, modulo p.
  std::int64_t unit_class(const FqElem& u) const;
};

/// Class in F_w^x/(F_w^x)^p: valuation mod p and unit exponent against TameField::g mod p.
struct LocalUnitClass {
  std::int64_t v = 0;
  std::int64_t e = 0;

  friend bool operator==(const LocalUnitClass& a, const LocalUnitClass& b) { return a.v == b.v && a.e == b.e; }
};

LocalUnitClass unit_product(const LocalUnitClass& a, const LocalUnitClass& b, int p);

using LocalKummerElem = std::map<std::string, LocalUnitClass>;

struct LocalPlace {
  std::string label;
  std::int64_t ell = 0;
  int residue_degree = 1;
  CurveFq curve;
  TorsionBasis basis;
  TameField tame;
};

/// UnsupportedPlace for l = p or ramification != 1; NotFullTorsion from the basis search.
LocalPlace make_local_place(std::string label, const CurveFq& E, int p, int ramification = 1);

/// k with {a, b} = zeta_res^k.
std::int64_t tame_hilbert(const LocalUnitClass& a, const LocalUnitClass& b, const TameField& K);
std::int64_t xi(const TameField& K, const FqElem& mu);
/// tame(a(S), b(T)) - tame(a(T), b(S)) mod p.
std::int64_t local_tate(const LocalKummerElem& a, const LocalKummerElem& b, const TameField& K);
LocalKummerElem kummer_image(const LocalPlace& place, const ECPoint& Q);

}  // namespace mtreg
