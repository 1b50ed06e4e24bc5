#pragma once

#include <cstdint>
#include <vector>

#include "mtreg/groupring/group.hpp"

namespace mtreg {

/// psi_a(sigma) = zeta^a for the fixed abstract zeta = zeta_{p^n}.
struct Character {
  GroupData group;
  std::int64_t a = 0;

  Character() = default;
  Character(GroupData g, std::int64_t a_);

  /// ker(psi) = J_t.
  int t() const;
  Character contragredient() const { return Character(group, -a); }
  bool is_trivial() const { return a == 0; }

  /// All p^n characters ordered by a.
  static std::vector<Character> all(const GroupData& g);
};

CycloNum apply_character(const IntElem& x, const Character& psi);
CycloNum apply_character(const RatElem& x, const Character& psi);
CycloNum apply_character(const GroupRingElem<CycloNum>& x, const Character& psi);
/// Complex value with zeta -> exp(2 pi i j_idx / p^n).
ComplexApprox apply_character(const GroupRingElem<ComplexApprox>& x, const Character& psi, std::int64_t j_idx);
ComplexApprox apply_character(const RatElem& x, const Character& psi, std::int64_t j_idx);

}  // namespace mtreg
