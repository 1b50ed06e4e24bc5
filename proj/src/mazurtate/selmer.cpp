#include "mtreg/mazurtate/selmer.hpp"

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

namespace {

const char* const kLabels[] = {"S", "T"};

GaloisRing::Elem horner(const GaloisRing& R, const std::vector<GaloisRing::Elem>& coeffs, const GaloisRing::Elem& t) {
  GaloisRing::Elem acc = R.from_int(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = R.add(R.mul(acc, t), *it);
  return acc;
}

const ECPoint& basis_point(const LocalPlace& w, const std::string& label) { return label == "S" ? w.basis.S : w.basis.T; }

}  // namespace

GaloisRing::Elem embed(const NumberFieldData& nf, const PlaceRestrictionData& pr, const FElem& a) {
  const GaloisRing R = pr.ring();
  GaloisRing::Elem acc = R.from_int(0);
  for (int i = 0; i < nf.degree(); ++i) {
    const Rational& c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    acc = R.add(acc, R.mul(R.from_rational(c), R.normalize(pr.basis_images[static_cast<std::size_t>(i)])));
  }
  return acc;
}

void validate_place(const NumberFieldData& nf, const std::vector<FElem>& torsion_poly, const Rational& lambda,
                    const PlaceRestrictionData& pr) {
  const std::string& lab = pr.place.label;
  const GaloisRing R = pr.ring();
  const int d = nf.degree();
  if (static_cast<int>(pr.basis_images.size()) != d) raise(ErrorCode::ShapeError, lab + ": reduction map needs one image per basis element");
  for (const auto& b : pr.basis_images)
    if (static_cast<int>(b.size()) != R.residue()->d) raise(ErrorCode::ShapeError, lab + ": reduction image has wrong length");
  GaloisRing::Elem t = d > 1 ? R.normalize(pr.basis_images[1]) : R.from_int(0), pw = R.from_int(1);
  std::vector<GaloisRing::Elem> poly;
  for (const auto& c : nf.poly()) poly.push_back(R.from_rational(c));
  for (int k = 0; k < d; ++k) {
    if (R.normalize(pr.basis_images[static_cast<std::size_t>(k)]) != pw)
      raise(ErrorCode::ShapeError, lab + ": reduction map is not multiplicative on the power basis");
    pw = R.mul(pw, t);
  }
  if (d > 1 && !R.is_zero(horner(R, poly, t))) raise(ErrorCode::ShapeError, lab + ": image of theta is not a root");

  std::vector<GaloisRing::Elem> f;
  for (const auto& c : torsion_poly) f.push_back(embed(nf, pr, c));
  const FqElem lam = R.residue_of(R.from_rational(lambda));
  for (const char* X : kLabels) {
    auto it = pr.root_images.find(X);
    if (it == pr.root_images.end()) raise(ErrorCode::InconsistentPlaces, lab + ": missing root image for " + X);
    const GaloisRing::Elem w = R.normalize(it->second);
    if (!R.is_zero(horner(R, f, w))) raise(ErrorCode::InconsistentPlaces, lab + ": root image of " + std::string(X) + " is not a root of f");
    const ECPoint& P = basis_point(pr.place, X);
    if (R.residue_of(w) != P.y + lam * P.x)
      raise(ErrorCode::InconsistentPlaces, lab + ": root image of " + std::string(X) + " does not reduce to y + lambda x of the torsion basis");
  }
}

SelmerElem g_act(const NumberFieldData& nf, std::int64_t k, const SelmerElem& h) {
  SelmerElem r;
  for (const auto& c : h.h) r.h.push_back(nf.act(k, c));
  return r;
}

SelmerElem selmer_mul(const NumberFieldData& nf, const std::vector<FElem>& f, const SelmerElem& a, const SelmerElem& b) {
  const std::size_t deg = f.size() - 1;
  std::vector<FElem> prod(a.h.size() + b.h.size(), nf.from_rational(0));
  for (std::size_t i = 0; i < a.h.size(); ++i)
    for (std::size_t j = 0; j < b.h.size(); ++j) prod[i + j] = nf.add(prod[i + j], nf.mul(a.h[i], b.h[j]));
  for (std::size_t k = prod.size(); k-- > deg;) {
    FElem c = prod[k];
    for (std::size_t i = 0; i <= deg; ++i) {
      FElem t = nf.mul(c, f[i]);
      for (auto& x : t) x = -x;
      prod[k - deg + i] = nf.add(prod[k - deg + i], t);
    }
  }
  prod.resize(std::min(prod.size(), deg));
  return {prod};
}

LocalKummerElem restrict_to(const NumberFieldData& nf, const SelmerElem& h, const PlaceRestrictionData& pr) {
  const GaloisRing R = pr.ring();
  const TameField& K = pr.place.tame;
  std::vector<GaloisRing::Elem> coeffs;
  for (const auto& c : h.h) coeffs.push_back(embed(nf, pr, c));
  LocalKummerElem out;
  for (const char* X : kLabels) {
    auto it = pr.root_images.find(X);
    if (it == pr.root_images.end()) raise(ErrorCode::InconsistentPlaces, pr.place.label + ": missing root image for " + X);
    GaloisRing::Elem z = horner(R, coeffs, R.normalize(it->second));
    if (R.is_zero(z)) raise(ErrorCode::BadReduction, pr.place.label + ": evaluation at " + X + " vanishes to precision " + std::to_string(R.precision()));
    out[X] = {mod_norm(R.valuation(z), K.p), K.unit_class(R.unit_residue(z))};
  }
  return out;
}

std::vector<std::int64_t> trace_preimage(const std::vector<std::int64_t>& xt, const ZpmMatrix& action, int p,
                                         std::int64_t free_value) {
  const ZpmRing R(p, 1);
  const int r = action.rows();
  if (action.cols() != r || static_cast<int>(xt.size()) != r) raise(ErrorCode::ShapeError, "trace_preimage: dimension mismatch");
  ZpmMatrix tr(r, r), pw = ZpmMatrix::identity(r);
  for (int k = 0; k < p; ++k) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) tr(i, j) = R.add(tr(i, j), pw(i, j));
    pw = multiply(R, pw, action);
  }
  std::vector<std::int64_t> b(xt.size());
  for (std::size_t i = 0; i < xt.size(); ++i) b[i] = R.norm(xt[i]);
  auto x = solve(R, tr, b, free_value);
  if (!x) raise(ErrorCode::NoPreimage, "point image is not in the image of Tr_G");
  return *x;
}

LocalKummerElem combine(const std::vector<LocalKummerElem>& classes, const std::vector<std::int64_t>& coords, int p) {
  LocalKummerElem out{{"S", {}}, {"T", {}}};
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (auto& [label, cls] : out) {
      const LocalUnitClass& c = classes[i].at(label);
      cls.v = mod_norm(cls.v + coords[i] * c.v, p);
      cls.e = mod_norm(cls.e + coords[i] * c.e, p);
    }
  return out;
}

}  // namespace mtreg
