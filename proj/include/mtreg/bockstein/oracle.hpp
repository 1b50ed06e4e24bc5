#pragma once

#include "mtreg/bockstein/phi.hpp"
#include "mtreg/regulator/mt_table.hpp"

namespace mtreg {

/// <P^t_(s,i), gamma P_(r,j)> = -a_gamma against sigma^{p^l} - 1, where rho_r(Lambda(row, col)) =
/// sum a_gamma gamma; all cells with r, s < n.
MTTable pairing_from_lambda(const PhiMatrix& lambda);

/// Connecting homomorphism of the snake lemma for the sequence twisted by phi^{-1}, at level l:
/// lift through Tr_{J_l}, apply Theta, divide by sigma^{p^l} - 1 and evaluate the dual coordinates.
/// Returns the cells with max(r, s) = l. Every cell is recomputed with a second choice of lifts;
/// LiftFailure if a lift does not exist or the two results differ.
MTTable snake_bockstein(const PhiMatrix& phi, int level);
/// Union over l = 0..n-1.
MTTable snake_table(const PhiMatrix& phi);

}  // namespace mtreg
