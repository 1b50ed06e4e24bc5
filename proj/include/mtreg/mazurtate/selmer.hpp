#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtreg/exactalg/zpm.hpp"
#include "mtreg/localpair/hilbert.hpp"
#include "mtreg/mazurtate/number_field.hpp"

namespace mtreg {

/// Class of h in (F[x]/(f))^x / p-th powers; h[i] is the coefficient of x^i.
struct SelmerElem {
  std::vector<FElem> h;
};

struct SelmerGroupData {
  std::vector<SelmerElem> generators;
  ZpmMatrix action;  // over F_p, column i = coordinates of sigma . generator_i
  std::map<std::string, std::vector<std::int64_t>> point_images;
  std::vector<SelmerElem> negative_controls;
};

enum class PlaceRole { Sigma, V };

struct PlaceRestrictionData {
  LocalPlace place;
  PlaceRole role = PlaceRole::Sigma;
  int adic_precision = 1;
  std::vector<GaloisRing::Elem> basis_images;               // iota_w(theta^i)
  std::map<std::string, GaloisRing::Elem> root_images;      // iota_w(w_X), X in {S, T}

  GaloisRing ring() const { return GaloisRing(place.curve.field(), adic_precision); }
};

/// Checks that iota_w is a ring homomorphism on the power basis, that the root images are roots of
/// f and reduce to y_X + lambda x_X for the place's torsion basis. ShapeError / InconsistentPlaces.
void validate_place(const NumberFieldData& nf, const std::vector<FElem>& torsion_poly, const Rational& lambda,
                    const PlaceRestrictionData& pr);

SelmerElem g_act(const NumberFieldData& nf, std::int64_t k, const SelmerElem& h);
/// h1 h2 mod f.
SelmerElem selmer_mul(const NumberFieldData& nf, const std::vector<FElem>& f, const SelmerElem& a,
                      const SelmerElem& b);

GaloisRing::Elem embed(const NumberFieldData& nf, const PlaceRestrictionData& pr, const FElem& a);

/// Local classes of (iota_w h)(w_X) for X in {S, T}, valuations included. BadReduction when a
/// denominator is divisible by l or the value vanishes to the available precision.
LocalKummerElem restrict_to(const NumberFieldData& nf, const SelmerElem& h, const PlaceRestrictionData& pr);

/// Solution of Tr_G x = xt over F_p (free variables set to free_value). NoPreimage when inconsistent.
std::vector<std::int64_t> trace_preimage(const std::vector<std::int64_t>& xt, const ZpmMatrix& action, int p,
                                         std::int64_t free_value = 0);

/// Exponent-linear combination of local classes.
LocalKummerElem combine(const std::vector<LocalKummerElem>& classes, const std::vector<std::int64_t>& coords, int p);

}  // namespace mtreg
