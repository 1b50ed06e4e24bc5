#pragma once

#include <cstdint>
#include <optional>

#include "mtreg/ffec/curve.hpp"

namespace mtreg {

struct TorsionBasis {
  ECPoint S;
  ECPoint T;
  int p = 3;
  FqElem zeta_res;  // e_p(T, S)
};

/// Value at Q of the Miller function f_{m,P}, divisor m(P) - ([m]P) - (m-1)(inf), normalised at
/// infinity. nullopt when Q meets the support of an intermediate line.
std::optional<FqElem> miller_value(const CurveFq& E, const ECPoint& P, std::int64_t m, const ECPoint& Q);

/// e_p(P, Q) = [f_P(Q+R)/f_P(R)] / [f_Q(P-R)/f_Q(-R)] for auxiliary points R. Two evaluations must
/// agree; the unshifted (-1)^p f_P(Q)/f_Q(P) is accepted as one of them.
FqElem weil_pairing(const CurveFq& E, const ECPoint& P, const ECPoint& Q, int p);

TorsionBasis find_p_torsion_basis(const CurveFq& E, int p);

/// Class of f_S(Q) in F_q^x/(F_q^x)^p as the zeta-log of f_S(Q)^{(q-1)/p}.
std::int64_t descent_eval(const CurveFq& E, const ECPoint& S, const ECPoint& Q, const FqElem& zeta_res, int p);

}  // namespace mtreg
