#include "mtreg/regulator/regulator.hpp"

#include <cmath>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/groupring/fourier.hpp"

namespace mtreg {

void HeightMatrix::validate() const {
  const PointsStructure& st = structure;
  const std::size_t ord = static_cast<std::size_t>(st.group().order());
  const std::size_t want = static_cast<std::size_t>(st.N() * st.N()) * ord;
  if (values.size() != want || (exact && exact->size() != want)) raise(ErrorCode::ShapeError, "height array size differs from N x N x |G|");
  if (!(err >= 0.0)) raise(ErrorCode::ShapeError, "height error bound must be non-negative");
  for (int row = 0; row < st.N(); ++row) {
    bool zero = true;
    for (std::size_t i = static_cast<std::size_t>(row * st.N()) * ord; i < static_cast<std::size_t>((row + 1) * st.N()) * ord; ++i)
      zero = zero && (exact ? (*exact)[i] == 0 : values[i] == 0.0);
    if (zero) raise(ErrorCode::DegenerateRegulator, "heights of " + to_string(st.at(row)) + " vanish identically");
  }
}

std::vector<RatElem> HeightMatrix::exact_entries() const {
  if (!exact) raise(ErrorCode::ShapeError, "exact heights not available");
  const GroupData& g = structure.group();
  const std::int64_t ord = g.order();
  std::vector<RatElem> out;
  for (int cell = 0; cell < structure.N() * structure.N(); ++cell) {
    RatElem x = RatElem::zero(g, Rational(0));
    for (std::int64_t k = 0; k < ord; ++k) x[mod_norm(-k, ord)] = (*exact)[static_cast<std::size_t>(cell * ord + k)];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<GroupRingElem<ComplexApprox>> HeightMatrix::float_entries() const {
  const GroupData& g = structure.group();
  const std::int64_t ord = g.order();
  std::vector<GroupRingElem<ComplexApprox>> out;
  for (int cell = 0; cell < structure.N() * structure.N(); ++cell) {
    auto x = GroupRingElem<ComplexApprox>::zero(g, ComplexApprox());
    for (std::int64_t k = 0; k < ord; ++k) {
      const std::size_t i = static_cast<std::size_t>(cell * ord + k);
      x[mod_norm(-k, ord)] = exact ? ComplexApprox::from_rational((*exact)[i]) : ComplexApprox(values[i], 0.0, err);
    }
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

Rational p_power(int p, int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= p;
  return e >= 0 ? r : Rational(1) / r;
}

std::string char_name(const Character& psi) { return "psi_" + std::to_string(psi.a); }

}  // namespace

CycloNum reg_nt_psi(const HeightMatrix& R, const Character& psi) {
  CycloNum e = epsilon_minor(R.structure, R.exact_entries(), psi);
  return p_power(R.structure.group().p(), -2 * m_psi(psi, R.structure)) * e;
}

ComplexApprox reg_nt_psi(const HeightMatrix& R, const Character& psi, std::int64_t j_idx) {
  ComplexApprox e = epsilon_minor(R.structure, R.float_entries(), psi, j_idx);
  if (!e.certainly_nonzero())
    raise(ErrorCode::PrecisionExhausted, "regulator minor of " + char_name(psi) + " is not certainly nonzero");
  return scale(e, p_power(R.structure.group().p(), -2 * m_psi(psi, R.structure)));
}

RegulatorComponents assemble_regulator(const HeightMatrix& R, const PsiMatrix& psi, std::int64_t j_idx, bool exact) {
  const PointsStructure& st = R.structure;
  if (!(st == psi.structure)) raise(ErrorCode::ShapeError, "heights and Psi use different structures");
  psi.check_shape();
  const GroupData& g = st.group();
  if (j_idx % g.p() == 0) raise(ErrorCode::BadExponent, "j_idx must be prime to p");
  RegulatorComponents out;
  out.j_idx = j_idx;
  out.sign = ((st.N() - st.m_top()) % 2 == 0) ? 1 : -1;
  for (const Character& chi : Character::all(g)) {
    const CycloNum eps_psi = epsilon_minor(psi, chi);
    if (eps_psi.is_zero()) raise(ErrorCode::NonUnitEpsilon, "eps of Psi vanishes at " + char_name(chi));
    const CycloNum delta = delta_psi(chi, st);
    if (exact) {
      CycloNum reg = reg_nt_psi(R, chi);
      if (reg.is_zero()) raise(ErrorCode::DegenerateRegulator, "regulator minor vanishes at " + char_name(chi));
      out.exact.push_back(Rational(out.sign) * reg * delta / eps_psi);
    } else {
      ComplexApprox reg = reg_nt_psi(R, chi, j_idx);
      ComplexApprox c = reg * delta.embed(j_idx) / eps_psi.embed(j_idx);
      out.approx.push_back(out.sign > 0 ? c : -c);
    }
  }
  return out;
}

std::int64_t complex_index(std::int64_t a, std::int64_t j_idx, const GroupData& g) { return mod_norm(mod_mul(a, j_idx, g.order()), g.order()); }

Verdict verify_unit_criterion(const AnalyticInput& L, const RegulatorComponents& comp, const GroupData& g, double tol,
                            const Integer& max_den) {
  const std::int64_t ord = g.order();
  Verdict v;
  v.j_idx = comp.j_idx;
  const std::int64_t jinv = mod_inv(mod_norm(comp.j_idx, ord), ord);
  if (!comp.exact.empty()) {
    if (!L.is_exact()) raise(ErrorCode::ShapeError, "exact regulator needs exact analytic values");
    std::vector<CycloNum> x;
    for (std::int64_t a = 0; a < ord; ++a) {
      const CycloNum& Lb = L.exact[static_cast<std::size_t>(complex_index(a, comp.j_idx, g))];
      x.push_back(Lb.galois_map(jinv) / comp.exact[static_cast<std::size_t>(a)]);
    }
    v.witness = fourier_invert(x, g);
  } else {
    std::vector<ComplexApprox> x;
    for (std::int64_t a = 0; a < ord; ++a) {
      const std::size_t b = static_cast<std::size_t>(complex_index(a, comp.j_idx, g));
      ComplexApprox Lb = L.is_exact() ? L.exact[b].embed(1) : L.approx[b];
      x.push_back(Lb / comp.approx[static_cast<std::size_t>(a)]);
    }
    FloatFourierResult f = fourier_invert(x, g, comp.j_idx, tol, max_den);
    v.witness = f.element;
    v.margins = f.margins;
  }
  bool integral = true;
  for (const auto& c : v.witness.coeffs()) {
    if (c == 0) {
      v.valuations.push_back(std::nullopt);
    } else {
      const int val = valuation(c, g.p());
      v.valuations.push_back(val);
      integral = integral && val >= 0;
    }
  }
  v.pass = integral && is_unit_Zp(v.witness);
  return v;
}

}  // namespace mtreg
