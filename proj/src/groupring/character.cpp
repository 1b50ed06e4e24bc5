#include "mtreg/groupring/character.hpp"

namespace mtreg {

Character::Character(GroupData g, std::int64_t a_) : group(g), a(mod_norm(a_, g.order())) {}

int Character::t() const {
  if (a == 0) return 0;
  return group.n() - valuation(a, group.p());
}

std::vector<Character> Character::all(const GroupData& g) {
  std::vector<Character> out;
  for (std::int64_t a = 0; a < g.order(); ++a) out.emplace_back(g, a);
  return out;
}

namespace {
template <class D>
CycloNum apply_exact(const GroupRingElem<D>& x, const Character& psi) {
  const GroupData& g = x.group();
  std::vector<Rational> c(static_cast<std::size_t>(g.order()), Rational(0));
  for (std::int64_t i = 0; i < g.order(); ++i) c[static_cast<std::size_t>(mod_norm(psi.a * i, g.order()))] += x[i];
  return CycloNum(g.p(), g.n(), c);
}
}  // namespace

CycloNum apply_character(const IntElem& x, const Character& psi) { return apply_exact(x, psi); }
CycloNum apply_character(const RatElem& x, const Character& psi) { return apply_exact(x, psi); }

CycloNum apply_character(const GroupRingElem<CycloNum>& x, const Character& psi) {
  const GroupData& g = x.group();
  CycloNum acc(g.p(), g.n());
  for (std::int64_t i = 0; i < g.order(); ++i) acc += x[i] * CycloNum::zeta_power(g.p(), g.n(), psi.a * i);
  return acc;
}

ComplexApprox apply_character(const GroupRingElem<ComplexApprox>& x, const Character& psi, std::int64_t j_idx) {
  const GroupData& g = x.group();
  ComplexApprox acc;
  for (std::int64_t i = 0; i < g.order(); ++i)
    acc = acc + x[i] * ComplexApprox::root_of_unity(mod_norm(psi.a * i, g.order()) * j_idx, g.order());
  return acc;
}

ComplexApprox apply_character(const RatElem& x, const Character& psi, std::int64_t j_idx) {
  return apply_character(x, psi).embed(j_idx);
}

}  // namespace mtreg
