#pragma once

#include <optional>
#include <vector>

#include "mtreg/ffec/pairing.hpp"
#include "mtreg/groupring/group.hpp"

namespace mtreg::testing {

inline FqElem el(const FieldPtr& F, std::int64_t v) { return FqElem::from_int(F, v); }

bool is_prime(std::int64_t n);

/// Tangent line at a point P of order 3, divisor 3(P) - 3(inf), normalised at inf; nullopt at a zero or pole.
std::optional<FqElem> flex_function(const CurveFq& E, const ECPoint& P, const ECPoint& X);

/// Weil pairing for p = 3 from tangent lines at the flexes; every usable auxiliary point gives a
/// value and all must agree (nullopt otherwise).
std::optional<FqElem> oracle_weil3(const CurveFq& E, const ECPoint& P, const ECPoint& Q);

/// E[p](F_q) by scanning the affine points.
std::vector<ECPoint> torsion_points(const CurveFq& E, int p);

/// Curves with full p-torsion: over F_l with l <= lmax, or over F_{l^2} with coefficients in F_l (q <= 200).
std::vector<CurveFq> full_torsion_curves(int p, std::int64_t lmax, std::size_t per_field, bool quadratic);

/// Tame symbol of pi^va ua and pi^vb ub on residues, dlogged by scanning mu_p (-1 if not in mu_p).
std::int64_t oracle_symbol(std::int64_t va, const FqElem& ua, std::int64_t vb, const FqElem& ub, const FqElem& zeta, int p);

/// First element of exact order p.
FqElem first_root_of_unity(const FieldPtr& F, int p);

/// x is invertible in Z/p^M[G]: matrix of multiplication by x over Z/p^M.
bool brute_invertible(const IntElem& x, int M);
/// x has an inverse in F_p[G], found by enumerating all of F_p[G].
bool enumerate_invertible_mod_p(const IntElem& x);

}  // namespace mtreg::testing
