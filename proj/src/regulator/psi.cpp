#include "mtreg/regulator/psi.hpp"

#include <algorithm>

#include "mtreg/bockstein/grmatrix.hpp"
#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/groupring/fourier.hpp"

namespace mtreg {

PsiMatrix::PsiMatrix(const PointsStructure& st)
    : structure(st), e(static_cast<std::size_t>(st.N() * st.N()), IntElem::zero(st.group(), Integer(0))) {}

PsiMatrix PsiMatrix::identity(const PointsStructure& st) {
  PsiMatrix m(st);
  for (int k = 0; k < st.N(); ++k) m(k, k) = IntElem::one(st.group(), Integer(0));
  return m;
}

void PsiMatrix::check_shape() const {
  const PointsStructure& st = structure;
  if (static_cast<int>(e.size()) != st.N() * st.N()) raise(ErrorCode::ShapeError, "Psi has the wrong size");
  const IntElem zero = IntElem::zero(st.group(), Integer(0));
  const IntElem one = IntElem::one(st.group(), Integer(0));
  for (int row = 0; row < st.N(); ++row)
    for (int col = 0; col < st.N(); ++col) {
      const int r = st.level(row), s = st.level(col);
      const bool top = r == st.n() || s == st.n();
      if (!top) {
        if (r > s) {
          const IntElem proj = project_rho((*this)(row, col), r);
          const std::int64_t q = ipow(st.group().p(), s);
          for (std::int64_t c = 0; c < proj.group().order(); ++c)
            if (proj[c] != proj[c % q])
              raise(ErrorCode::ShapeError, "Psi entry " + to_string(st.at(row)) + "," + to_string(st.at(col)) +
                                               " is not J_" + std::to_string(s) + "-invariant under rho_" + std::to_string(r));
        }
        continue;
      }
      const IntElem& want = (row == col) ? one : zero;
      if (!((*this)(row, col) == want))
        raise(ErrorCode::ShapeError, "Psi entry " + to_string(st.at(row)) + "," + to_string(st.at(col)) + " breaks the block form");
    }
}

PsiMatrix solve_psi(const MTTable& table) {
  table.validate();
  const PointsStructure& st = table.structure;
  PsiMatrix psi = PsiMatrix::identity(st);
  for (int row = 0; row < st.lower_count(); ++row)
    for (int col = 0; col < st.lower_count(); ++col) {
      const auto& fam = table.at(row, col);
      IntElem x = IntElem::zero(st.group(), Integer(0));
      for (std::size_t c = 0; c < fam.size(); ++c) x[static_cast<std::int64_t>(c)] = Integer(static_cast<long>(fam[c].exponent()));
      psi(row, col) = x;
    }
  if (!satisfies_table(psi, table)) raise(ErrorCode::TableLevelMismatch, "canonical Psi does not reproduce the table");
  return psi;
}

bool satisfies_table(const PsiMatrix& psi, const MTTable& table) {
  const PointsStructure& st = table.structure;
  for (int row = 0; row < st.lower_count(); ++row)
    for (int col = 0; col < st.lower_count(); ++col) {
      const int r = st.level(row), l = std::max(r, st.level(col));
      const IntElem proj = project_rho(psi(row, col), r);
      const auto& fam = table.at(row, col);
      for (std::size_t c = 0; c < fam.size(); ++c)
        if (!(AugClass(st.group(), l, proj[static_cast<std::int64_t>(c)]) == fam[c])) return false;
    }
  return true;
}

bool det_is_unit(const PsiMatrix& psi) {
  const PointsStructure& st = psi.structure;
  GRContext c(st.group(), 1);
  GRMatrix m(c, st.N());
  for (int row = 0; row < st.N(); ++row)
    for (int col = 0; col < st.N(); ++col) m(row, col) = c.from(psi(row, col));
  return eps_fp_det(m) != 0;
}

void check_same_congruences(const PsiMatrix& a, const PsiMatrix& b, int M) {
  const PointsStructure& st = a.structure;
  if (!(st == b.structure)) raise(ErrorCode::ShapeError, "Psi matrices over different structures");
  a.check_shape();
  b.check_shape();
  for (int row = 0; row < st.lower_count(); ++row)
    for (int col = 0; col < st.lower_count(); ++col) {
      const int r = st.level(row), l = std::max(r, st.level(col));
      IntElem d = a(row, col) - b(row, col);
      d = Integer(static_cast<long>(ipow(st.group().p(), l - r))) * d;
      if (!ideal_membership(d, r, M))
        raise(ErrorCode::IdealViolation, "Psi entries at " + to_string(st.at(row)) + "," + to_string(st.at(col)) + " satisfy different congruences");
    }
}

}  // namespace mtreg
