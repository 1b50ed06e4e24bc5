#include "mtreg/bockstein/oracle.hpp"

#include <algorithm>

#include "mtreg/bockstein/syzygy.hpp"
#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

MTTable pairing_from_lambda(const PhiMatrix& lambda) {
  const PointsStructure& st = lambda.structure();
  const GRContext& c = lambda.ctx();
  MTTable t{st, {}};
  for (int row = 0; row < st.lower_count(); ++row)
    for (int col = 0; col < st.lower_count(); ++col) {
      const int r = st.level(row), l = std::max(r, st.level(col));
      auto a = c.rho(lambda.matrix()(row, col), r);
      for (auto& x : a) x = -x;
      t.entries[{row, col}] = aug_family(st.group(), l, a);
    }
  return t;
}

namespace {

std::vector<std::int64_t> snake_column(const SyzygyPresentation& syz, const ZpmMatrix& phi_pts, const SmithForm& tr_l,
                                       const SmithForm& tau_l, int col, std::int64_t free_value) {
  const PointsStructure& st = syz.structure;
  const ZpmRing& R = syz.R;
  std::vector<std::int64_t> e(static_cast<std::size_t>(phi_pts.rows()), 0);
  e[static_cast<std::size_t>(point_coord_offset(st, col))] = 1;
  auto y = solve(R, phi_pts, e, free_value);
  if (!y) raise(ErrorCode::LiftFailure, "phi is not surjective on the dual points");
  auto v = apply(R, syz.iota, *y);
  auto z = solve(R, tr_l, v, free_value);
  if (!z) raise(ErrorCode::LiftFailure, "no lift through the trace");
  auto w = apply(R, syz.theta, *z);
  auto x = solve(R, tau_l, w, free_value);
  if (!x) raise(ErrorCode::LiftFailure, "Theta of the lift is not divisible by sigma^{p^l} - 1");
  return *x;
}

}  // namespace

MTTable snake_bockstein(const PhiMatrix& phi, int level) {
  const PointsStructure& st = phi.structure();
  const GroupData& g = st.group();
  if (level < 0 || level >= st.n()) raise(ErrorCode::ShapeError, "snake level out of range");
  SyzygyPresentation syz(st, phi.precision());
  const ZpmRing& R = syz.R;
  const int ord = static_cast<int>(g.order());
  std::vector<std::vector<std::int64_t>> tr(static_cast<std::size_t>(st.N()), reduce_coeffs(trace_J(g, level), R));
  std::vector<std::vector<std::int64_t>> tau(static_cast<std::size_t>(st.N()), reduce_coeffs(sigma_pow_minus_one(g, level), R));
  const SmithForm tr_l = smith_form(R, syz.block_multiplication(tr));
  const SmithForm tau_l = smith_form(R, syz.block_multiplication(tau));
  const ZpmMatrix phi_pts = phi.on_points();
  const std::int64_t target = g.sub_order(level);

  MTTable t{st, {}};
  for (int col = 0; col < st.lower_count(); ++col) {
    const int s = st.level(col);
    if (s > level) continue;
    auto x0 = snake_column(syz, phi_pts, tr_l, tau_l, col, 0);
    auto x1 = snake_column(syz, phi_pts, tr_l, tau_l, col, 1);
    for (int row = 0; row < st.lower_count(); ++row) {
      const int r = st.level(row);
      if (r > level || std::max(r, s) != level) continue;
      const std::int64_t q = ipow(g.p(), r);
      std::vector<std::int64_t> a0(static_cast<std::size_t>(q), 0), a1 = a0;
      for (int i = 0; i < ord; ++i) {
        const std::size_t k = static_cast<std::size_t>(row * ord + i);
        a0[static_cast<std::size_t>(i % q)] += x0[k];
        a1[static_cast<std::size_t>(i % q)] += x1[k];
      }
      for (std::size_t c = 0; c < a0.size(); ++c) {
        a0[c] = mod_norm(-a0[c], target);
        a1[c] = mod_norm(-a1[c], target);
      }
      if (a0 != a1) raise(ErrorCode::LiftFailure, "snake value depends on the lift at " + to_string(st.at(row)) + "," + to_string(st.at(col)));
      t.entries[{row, col}] = aug_family(g, level, a0);
    }
  }
  return t;
}

MTTable snake_table(const PhiMatrix& phi) {
  MTTable all{phi.structure(), {}};
  for (int l = 0; l < phi.structure().n(); ++l) {
    MTTable part = snake_bockstein(phi, l);
    all.entries.insert(part.entries.begin(), part.entries.end());
  }
  return all;
}

}  // namespace mtreg
