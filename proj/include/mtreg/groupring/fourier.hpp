#pragma once

#include <cstdint>
#include <vector>

#include "mtreg/groupring/character.hpp"

namespace mtreg {

/// sum_psi x_psi e_psi with x indexed by the character exponent a; the result must be rational
/// (NotGaloisStable otherwise).
RatElem fourier_invert(const std::vector<CycloNum>& values, const GroupData& g);

struct FloatFourierResult {
  RatElem element;
  /// Per-coefficient reconstruction margins (tol minus worst-case distance).
  std::vector<double> margins;
};

/// Float version: character a is realised as sigma -> exp(2 pi i a j_idx / p^n). Each coefficient is
/// reconstructed by rational_reconstruct; PrecisionExhausted names the failing coefficient.
FloatFourierResult fourier_invert(const std::vector<ComplexApprox>& values, const GroupData& g, std::int64_t j_idx,
                                  double tol, const Integer& max_den);

/// x is a unit of Z_p[G] iff its augmentation is nonzero mod p. NotPIntegral if some coefficient is not p-integral.
bool is_unit_Zp(const RatElem& x);
bool is_unit_Zp(const IntElem& x);

/// x mod p^M lies in (sigma^{p^r} - 1) Z/p^M[G] + Tr_{J_r} Z/p^M[G].
bool ideal_membership(const IntElem& x, int r, int M);

inline int default_precision(int n) { return n + 6; }

}  // namespace mtreg
