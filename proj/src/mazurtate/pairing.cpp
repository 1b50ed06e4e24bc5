#include "mtreg/mazurtate/pairing.hpp"

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

AugClass PairResult::pairing(const GroupData& g) const { return AugClass(g, 0, Integer(static_cast<long>(-neg_exponent))); }

PairResult mt_pair(const PairingCase& c, const std::string& P, const std::string& Q, std::int64_t free_value) {
  const int p = c.p;
  const ZpmRing F(p, 1);
  auto img = c.selmer.point_images.find(P);
  if (img == c.selmer.point_images.end()) raise(ErrorCode::InconsistentPlaces, "no Selmer image for point " + P);
  auto red = c.point_reductions.find(Q);
  if (red == c.point_reductions.end()) raise(ErrorCode::InconsistentPlaces, "no reductions for point " + Q);

  PairResult out;
  out.coefficients.assign(static_cast<std::size_t>(p), 0);
  out.preimage = trace_preimage(img->second, c.selmer.action, p, free_value);

  // x^g coordinates for g = sigma^k.
  std::vector<std::vector<std::int64_t>> xg{out.preimage};
  for (int k = 1; k < p; ++k) xg.push_back(apply(F, c.selmer.action, xg.back()));

  bool any_sigma = false;
  for (const auto& pr : c.places) {
    if (pr.role != PlaceRole::Sigma) continue;
    any_sigma = true;
    auto q = red->second.find(pr.place.label);
    if (q == red->second.end()) raise(ErrorCode::InconsistentPlaces, "point " + Q + " has no reduction at " + pr.place.label);
    std::vector<LocalKummerElem> gens;
    for (const auto& h : c.selmer.generators) gens.push_back(restrict_to(c.nf, h, pr));
    const LocalKummerElem b = kummer_image(pr.place, q->second);
    for (int k = 0; k < p; ++k) {
      std::int64_t t = local_tate(combine(gens, xg[static_cast<std::size_t>(k)], p), b, pr.place.tame);
      out.audit.push_back({pr.place.label, k, t});
      out.coefficients[static_cast<std::size_t>(k)] = mod_norm(out.coefficients[static_cast<std::size_t>(k)] + t, p);
    }
  }
  if (!any_sigma) raise(ErrorCode::InconsistentPlaces, "no places of the admissible set");
  // sum_g c_g g = aug + (sum_g c_g k_g)(sigma - 1) mod I^2.
  for (int k = 0; k < p; ++k) out.neg_exponent = mod_norm(out.neg_exponent + k * out.coefficients[static_cast<std::size_t>(k)], p);
  return out;
}

bool check_local_conditions(const PairingCase& c, const SelmerElem& xi) {
  const int p = c.p;
  const ZpmRing F(p, 1);
  for (const auto& pr : c.places) {
    if (pr.role != PlaceRole::V) continue;
    const LocalKummerElem a = restrict_to(c.nf, xi, pr);
    const auto pts = affine_points(pr.place.curve);
    ZpmMatrix span(4, static_cast<int>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const LocalKummerElem k = kummer_image(pr.place, pts[j]);
      const int col = static_cast<int>(j);
      span(0, col) = k.at("S").v;
      span(1, col) = k.at("S").e;
      span(2, col) = k.at("T").v;
      span(3, col) = k.at("T").e;
    }
    std::vector<std::int64_t> target{a.at("S").v, a.at("S").e, a.at("T").v, a.at("T").e};
    if (!solve(F, span, target)) return false;
  }
  return true;
}

}  // namespace mtreg
