#include "mtreg/cli/pairing_section.hpp"

#include "json_path.hpp"
#include "mtreg/exactalg/errors.hpp"

namespace mtreg::cli {

namespace {

std::vector<Rational> rationals(const JNode& n) {
  std::vector<Rational> out;
  n.for_each_item([&](std::size_t, const JNode& c) { out.push_back(c.as_rational()); });
  return out;
}

std::vector<std::int64_t> ints(const JNode& n) {
  std::vector<std::int64_t> out;
  n.for_each_item([&](std::size_t, const JNode& c) { out.push_back(c.as_int()); });
  return out;
}

FElem felem(const JNode& n, int d) {
  FElem e = rationals(n);
  if (static_cast<int>(e.size()) != d) n.fail("expected " + std::to_string(d) + " coordinates");
  return e;
}

SelmerElem selmer_elem(const JNode& n, int d) {
  SelmerElem s;
  n.for_each_item([&](std::size_t, const JNode& c) { s.h.push_back(felem(c, d)); });
  return s;
}

FqElem fq(const JNode& n, const FieldPtr& F) {
  if (n.raw().is_number_integer()) return FqElem::from_int(F, n.as_int());
  auto c = ints(n);
  if (static_cast<int>(c.size()) != F->d) n.fail("expected " + std::to_string(F->d) + " residue coordinates");
  return FqElem(F, c);
}

ECPoint point(const JNode& n, const CurveFq& E) {
  if (n.is_string()) {
    if (n.as_string() != "inf") n.fail("expected \"inf\" or [x, y]");
    return ECPoint::infinity();
  }
  if (n.size() != 2) n.fail("expected [x, y]");
  return with_path(n, [&] { return E.point(fq(n.at(0), E.field()), fq(n.at(1), E.field())); });
}

PlaceRestrictionData place(const JNode& n, int p, const NumberFieldData& nf, const std::vector<FElem>& f,
                           const Rational& lambda) {
  const std::string label = n.at("label").as_string();
  const std::int64_t ell = n.at("ell").as_int();
  FieldPtr F = with_path(n.at("modulus"), [&] { return FqField::make(ell, ints(n.at("modulus"))); });
  if (n.at("q").as_int() != F->q) n.at("q").fail("q differs from l^deg(modulus)");
  const int ram = n.has("ramification") ? static_cast<int>(n.at("ramification").as_int()) : 1;
  JNode cn = n.at("curve");
  CurveFq E = with_path(cn, [&] { return CurveFq(fq(cn.at("a"), F), fq(cn.at("b"), F)); });

  PlaceRestrictionData pr{with_path(n, [&] { return make_local_place(label, E, p, ram); }), PlaceRole::Sigma, 1, {}, {}};
  const std::string role = n.at("role").as_string();
  if (role == "sigma") {
    pr.role = PlaceRole::Sigma;
  } else if (role == "V") {
    pr.role = PlaceRole::V;
  } else {
    n.at("role").fail("expected \"sigma\" or \"V\"");
  }
  if (auto hint = n.find("basis_hint")) {
    for (const char* X : {"S", "T"}) {
      ECPoint P = point(hint->at(X), E);
      const ECPoint& mine = std::string(X) == "S" ? pr.place.basis.S : pr.place.basis.T;
      if (P != mine)
        raise(ErrorCode::InconsistentPlaces, hint->at(X).path() + ": basis hint " + to_string(P) + " differs from the canonical " + to_string(mine));
    }
  }
  if (auto k = n.find("adic_precision")) pr.adic_precision = static_cast<int>(k->as_int());
  n.at("reduction_map").for_each_item([&](std::size_t, const JNode& c) { pr.basis_images.push_back(ints(c)); });
  n.at("root_images").for_each_member([&](const std::string& key, const JNode& c) { pr.root_images[key] = ints(c); });
  with_path(n, [&] { validate_place(nf, f, lambda, pr); });
  return pr;
}

}  // namespace

PairingSection parse_pairing_pipeline(const nlohmann::json& j, int p, const std::string& path) {
  JNode root(j, path);
  PairingSection out;
  PairingCase& c = out.pcase;
  c.p = p;
  JNode nfn = root.at("number_field");
  std::vector<std::vector<Rational>> sigma;
  nfn.at("sigma").for_each_item([&](std::size_t, const JNode& row) { sigma.push_back(rationals(row)); });
  c.nf = with_path(nfn, [&] { return NumberFieldData(rationals(nfn.at("poly")), sigma); });
  const int d = c.nf.degree();
  if (d != p) nfn.fail("the pipeline needs a cyclic field of degree p");

  root.at("torsion_poly").for_each_item([&](std::size_t, const JNode& n) { c.torsion_poly.push_back(felem(n, d)); });
  if (c.torsion_poly.size() < 2 || c.torsion_poly.back() != c.nf.from_rational(1)) root.at("torsion_poly").fail("expected a monic polynomial");
  c.lambda = root.at("lambda").as_rational();

  JNode sel = root.at("selmer");
  sel.at("generators").for_each_item([&](std::size_t, const JNode& n) { c.selmer.generators.push_back(selmer_elem(n, d)); });
  const int r = static_cast<int>(c.selmer.generators.size());
  JNode act = sel.at("action");
  if (static_cast<int>(act.size()) != r) act.fail("action must be " + std::to_string(r) + " x " + std::to_string(r));
  c.selmer.action = ZpmMatrix(r, r);
  for (int i = 0; i < r; ++i) {
    auto row = ints(act.at(static_cast<std::size_t>(i)));
    if (static_cast<int>(row.size()) != r) act.at(static_cast<std::size_t>(i)).fail("wrong row length");
    for (int k = 0; k < r; ++k) c.selmer.action(i, k) = mod_norm(row[static_cast<std::size_t>(k)], p);
  }
  {
    const ZpmRing F(p, 1);
    ZpmMatrix pw = ZpmMatrix::identity(r);
    for (int k = 0; k < p; ++k) pw = multiply(F, pw, c.selmer.action);
    bool id = true;
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) id = id && pw(i, k) == (i == k ? 1 : 0);
    if (!id) act.fail("action matrix does not have order dividing p");
  }
  sel.at("point_images").for_each_member([&](const std::string& key, const JNode& n) {
    auto v = ints(n);
    if (static_cast<int>(v.size()) != r) n.fail("expected " + std::to_string(r) + " coordinates");
    c.selmer.point_images[key] = v;
  });
  if (auto neg = sel.find("negative_controls"))
    neg->for_each_item([&](std::size_t, const JNode& n) { c.selmer.negative_controls.push_back(selmer_elem(n, d)); });

  root.at("places").for_each_item([&](std::size_t, const JNode& n) { c.places.push_back(place(n, p, c.nf, c.torsion_poly, c.lambda)); });

  root.at("point_reductions").for_each_member([&](const std::string& qlab, const JNode& per) {
    per.for_each_member([&](const std::string& plab, const JNode& pt) {
      const PlaceRestrictionData* pr = nullptr;
      for (const auto& x : c.places)
        if (x.place.label == plab) pr = &x;
      if (!pr) raise(ErrorCode::InconsistentPlaces, pt.path() + ": unknown place " + plab);
      c.point_reductions[qlab][plab] = point(pt, pr->place.curve);
    });
  });

  if (auto tl = root.find("table_labels")) {
    tl->at("dual").for_each_item([&](std::size_t, const JNode& n) { out.dual_labels.push_back(n.as_string()); });
    tl->at("points").for_each_item([&](std::size_t, const JNode& n) { out.point_labels.push_back(n.as_string()); });
  }
  return out;
}

}  // namespace mtreg::cli
