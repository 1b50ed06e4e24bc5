#pragma once

#include "mtreg/bockstein/phi.hpp"
#include "mtreg/regulator/psi.hpp"

namespace mtreg {

struct IndependenceResult {
  bool unit = false;
  /// sum_psi eps_psi(Psi1) / eps_psi(Psi2) e_psi.
  RatElem witness{GroupData(), std::vector<Rational>(3)};
};

/// Both matrices must satisfy the same congruences mod p^M (IdealViolation otherwise).
/// NonUnitDenominator if eps_psi(Psi2) = 0 for some psi.
IndependenceResult independence_check(const PsiMatrix& psi1, const PsiMatrix& psi2, int M);

/// Psi + (sigma^{p^r} - 1) lambda + Tr_{J_r} nu + p^{n-l} mu at one upper-left cell. For r > s
/// the last two terms are multiplied by Tr_{J_s/J_r} so the entry stays J_s-invariant.
PsiMatrix legal_move(const PsiMatrix& psi, int row, int col, const IntElem& lambda, const IntElem& nu, const IntElem& mu);

/// Psi read off the upper-left block of -Lambda. Lambda is only known mod p^M, so each lifted
/// entry with r > s is corrected by multiples of p^M to keep rho_r(entry) J_s-invariant.
PsiMatrix psi_from_lambda(const PhiMatrix& lambda);

}  // namespace mtreg
