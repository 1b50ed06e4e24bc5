#include "mtreg/bockstein/independence.hpp"

#include <algorithm>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/groupring/fourier.hpp"
#include "mtreg/regulator/minor.hpp"

namespace mtreg {

IndependenceResult independence_check(const PsiMatrix& psi1, const PsiMatrix& psi2, int M) {
  check_same_congruences(psi1, psi2, M);
  const GroupData& g = psi1.structure.group();
  std::vector<CycloNum> ratio;
  for (const Character& chi : Character::all(g)) {
    const CycloNum den = epsilon_minor(psi2, chi);
    if (den.is_zero()) raise(ErrorCode::NonUnitDenominator, "eps of the second Psi vanishes at psi_" + std::to_string(chi.a));
    ratio.push_back(epsilon_minor(psi1, chi) / den);
  }
  IndependenceResult out;
  out.witness = fourier_invert(ratio, g);
  try {
    out.unit = is_unit_Zp(out.witness);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPIntegral) throw;
    out.unit = false;
  }
  return out;
}

PsiMatrix legal_move(const PsiMatrix& psi, int row, int col, const IntElem& lambda, const IntElem& nu, const IntElem& mu) {
  const PointsStructure& st = psi.structure;
  if (row >= st.lower_count() || col >= st.lower_count()) raise(ErrorCode::ShapeError, "legal moves act on the upper-left block");
  const GroupData& g = st.group();
  const int r = st.level(row), s = st.level(col), l = std::max(r, s);
  const IntElem rel = r > s ? trace_relative(g, s, r) : IntElem::one(g, Integer(0));
  PsiMatrix out = psi;
  out(row, col) = out(row, col) + sigma_pow_minus_one(g, r) * lambda +
                  rel * (trace_J(g, r) * nu + Integer(static_cast<long>(ipow(g.p(), st.n() - l))) * mu);
  return out;
}

PsiMatrix psi_from_lambda(const PhiMatrix& lambda) {
  const PointsStructure& st = lambda.structure();
  const GRContext& c = lambda.ctx();
  const GroupData& g = st.group();
  PsiMatrix out = PsiMatrix::identity(st);
  for (int row = 0; row < st.lower_count(); ++row)
    for (int col = 0; col < st.lower_count(); ++col) {
      IntElem x = c.lift(c.neg(lambda.matrix()(row, col)));
      const int r = st.level(row), s = st.level(col);
      if (r > s) {
        const IntElem proj = project_rho(x, r);
        const std::int64_t q = ipow(g.p(), s);
        for (std::int64_t k = 0; k < proj.group().order(); ++k) x[k] = x[k] + (proj[k % q] - proj[k]);
      }
      out(row, col) = x;
    }
  out.check_shape();
  return out;
}

}  // namespace mtreg
