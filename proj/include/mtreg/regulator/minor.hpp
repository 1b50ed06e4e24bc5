#pragma once

#include <vector>

#include "mtreg/bockstein/structure.hpp"
#include "mtreg/exactalg/complex_approx.hpp"
#include "mtreg/exactalg/cyclo.hpp"
#include "mtreg/groupring/character.hpp"
#include "mtreg/regulator/psi.hpp"

namespace mtreg {

/// Indices with level >= t, in structure order.
std::vector<int> minor_indices(const PointsStructure& st, int t);

/// det of psi applied to the rows and columns with level >= t_psi (1 for an empty minor).
CycloNum epsilon_minor(const PointsStructure& st, const std::vector<RatElem>& m, const Character& psi);
CycloNum epsilon_minor(const PsiMatrix& m, const Character& psi);
ComplexApprox epsilon_minor(const PointsStructure& st, const std::vector<GroupRingElem<ComplexApprox>>& m,
                            const Character& psi, std::int64_t j_idx);

/// prod_{r < t_psi} (psi(sigma)^{p^r} - 1)^{m_r}.
CycloNum delta_psi(const Character& psi, const PointsStructure& st);
/// sum_{r >= t_psi} (n - r) m_r.
int m_psi(const Character& psi, const PointsStructure& st);

/// Row-expansion determinant over a commutative ring, memoised on column subsets.
template <class D>
D determinant(const std::vector<std::vector<D>>& a, const D& one);

}  // namespace mtreg
