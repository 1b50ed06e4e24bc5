#include "synthetic.hpp"

#include <algorithm>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/groupring/fourier.hpp"

namespace mtreg::testing {

MTTable random_table(const PointsStructure& st, std::mt19937_64& rng) {
  const GroupData& g = st.group();
  for (;;) {
    MTTable t{st, {}};
    for (int row = 0; row < st.lower_count(); ++row)
      for (int col = 0; col < st.lower_count(); ++col) {
        const int r = st.level(row), s = st.level(col), l = std::max(r, s);
        std::uniform_int_distribution<std::int64_t> d(0, g.sub_order(l) - 1);
        const std::int64_t q = ipow(g.p(), r), qs = ipow(g.p(), std::min(r, s));
        std::vector<std::int64_t> e(static_cast<std::size_t>(q));
        for (std::int64_t c = 0; c < q; ++c) e[static_cast<std::size_t>(c)] = c < qs ? d(rng) : e[static_cast<std::size_t>(c % qs)];
        t.entries[{row, col}] = aug_family(g, l, e);
      }
    if (det_is_unit(solve_psi(t))) return t;
  }
}

HeightMatrix random_heights(const PointsStructure& st, std::mt19937_64& rng) {
  const GroupData& g = st.group();
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  for (;;) {
    HeightMatrix h{st, {}, 0.0, std::vector<Rational>{}};
    const std::size_t size = static_cast<std::size_t>(st.N() * st.N() * g.order());
    for (std::size_t i = 0; i < size; ++i) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      h.exact->push_back(x);
      h.values.push_back(x.get_d());
    }
    bool ok = true;
    for (const Character& chi : Character::all(g)) ok = ok && !epsilon_minor(st, h.exact_entries(), chi).is_zero();
    if (ok) return h;
  }
}

IntElem random_unit(const GroupData& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  for (;;) {
    IntElem u = IntElem::zero(g, Integer(0));
    for (std::int64_t i = 0; i < g.order(); ++i) u[i] = d(rng);
    if (is_unit_Zp(u)) return u;
  }
}

SyntheticCase make_synthetic(const PointsStructure& st, std::mt19937_64& rng, bool exact, double err) {
  SyntheticCase c{st, random_heights(st, rng), random_table(st, rng), {}, random_unit(st.group(), rng)};
  const GroupData& g = st.group();
  RegulatorComponents comp = assemble_regulator(c.heights, solve_psi(c.table), 1, true);
  for (const Character& chi : Character::all(g)) {
    CycloNum L = apply_character(to_rational(c.u), chi) * comp.exact[static_cast<std::size_t>(chi.a)];
    if (exact) {
      c.analytic.exact.push_back(L);
    } else {
      ComplexApprox z = L.embed(1);
      c.analytic.approx.emplace_back(z.re, z.im, std::max(err, z.err));
    }
  }
  if (!exact) {
    c.heights.exact.reset();
    c.heights.err = err;
  }
  return c;
}

SyntheticCase scaled_by_p(const SyntheticCase& c) {
  SyntheticCase s = c;
  const int p = c.structure.group().p();
  for (auto& x : s.analytic.exact) x = Rational(p) * x;
  for (auto& x : s.analytic.approx) x = scale(x, Rational(p));
  return s;
}

SyntheticCase change_generator(const SyntheticCase& c, std::int64_t k) {
  const PointsStructure& st = c.structure;
  const GroupData& g = st.group();
  const std::int64_t ord = g.order();
  const std::int64_t kinv = mod_inv(mod_norm(k, ord), ord);
  SyntheticCase s = c;
  // <sigma'^i P^t, P> = <sigma^{ik} P^t, P>.
  for (int cell = 0; cell < st.N() * st.N(); ++cell)
    for (std::int64_t i = 0; i < ord; ++i) {
      const std::size_t to = static_cast<std::size_t>(cell * ord + i);
      const std::size_t from = static_cast<std::size_t>(cell * ord + mod_norm(i * k, ord));
      s.heights.values[to] = c.heights.values[from];
      if (c.heights.exact) (*s.heights.exact)[to] = (*c.heights.exact)[from];
    }
  // sigma^c = sigma'^{c k^{-1}}, and the exponent against sigma^{p^l} - 1 scales by k^{-1}.
  for (auto& [key, fam] : s.table.entries) {
    const auto& old = c.table.entries.at(key);
    const std::int64_t q = static_cast<std::int64_t>(old.size());
    for (std::int64_t cc = 0; cc < q; ++cc) {
      const AugClass& v = old[static_cast<std::size_t>(cc)];
      fam[static_cast<std::size_t>(mod_norm(cc * kinv, q))] = AugClass(g, v.level(), Integer(static_cast<long>(mod_mul(v.exponent(), mod_norm(kinv, v.modulus()), v.modulus()))));
    }
  }
  // chi_b(sigma') = chi_{bk}(sigma).
  for (std::int64_t b = 0; b < ord; ++b) {
    const std::size_t to = static_cast<std::size_t>(mod_norm(b * k, ord));
    if (c.analytic.is_exact()) s.analytic.exact[to] = c.analytic.exact[static_cast<std::size_t>(b)];
    else s.analytic.approx[to] = c.analytic.approx[static_cast<std::size_t>(b)];
  }
  return s;
}

Verdict run_verify(const SyntheticCase& c, std::int64_t j_idx, double tol) {
  const bool exact = c.analytic.is_exact() && c.heights.is_exact();
  RegulatorComponents comp = assemble_regulator(c.heights, solve_psi(c.table), j_idx, exact);
  return verify_unit_criterion(c.analytic, comp, c.structure.group(), tol, Integer(1000000));
}

}  // namespace mtreg::testing
