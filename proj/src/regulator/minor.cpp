#include "mtreg/regulator/minor.hpp"

#include <functional>
#include <unordered_map>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

std::vector<int> minor_indices(const PointsStructure& st, int t) {
  std::vector<int> idx;
  for (int k = 0; k < st.N(); ++k)
    if (st.level(k) >= t) idx.push_back(k);
  return idx;
}

template <class D>
D determinant(const std::vector<std::vector<D>>& a, const D& one) {
  const int n = static_cast<int>(a.size());
  if (n > 20) raise(ErrorCode::ShapeError, "determinant: matrix too large");
  // f[mask] = det of the rows 0..popcount(mask)-1 against the columns in mask.
  std::unordered_map<std::uint32_t, D> memo;
  std::function<D(std::uint32_t, int)> rec = [&](std::uint32_t cols, int row) -> D {
    if (row == n) return one;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    D acc = one - one;
    int sign_pos = 0;
    for (int c = 0; c < n; ++c) {
      if (cols & (1u << c)) continue;
      D term = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] * rec(cols | (1u << c), row + 1);
      acc = (sign_pos % 2 == 0) ? acc + term : acc - term;
      ++sign_pos;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(0, 0);
}

template CycloNum determinant<CycloNum>(const std::vector<std::vector<CycloNum>>&, const CycloNum&);
template ComplexApprox determinant<ComplexApprox>(const std::vector<std::vector<ComplexApprox>>&, const ComplexApprox&);

namespace {

template <class D, class F>
D minor_of(const PointsStructure& st, const Character& psi, const D& one, F value) {
  const auto idx = minor_indices(st, psi.t());
  std::vector<std::vector<D>> a;
  for (int row : idx) {
    std::vector<D> line;
    for (int col : idx) line.push_back(value(row, col));
    a.push_back(std::move(line));
  }
  return determinant(a, one);
}

void check_size(const PointsStructure& st, std::size_t size) {
  if (size != static_cast<std::size_t>(st.N() * st.N())) raise(ErrorCode::ShapeError, "matrix size differs from N x N");
}

}  // namespace

CycloNum epsilon_minor(const PointsStructure& st, const std::vector<RatElem>& m, const Character& psi) {
  check_size(st, m.size());
  const CycloNum one = CycloNum::from_rational(st.group().p(), st.n(), 1);
  return minor_of(st, psi, one, [&](int row, int col) { return apply_character(m[static_cast<std::size_t>(row * st.N() + col)], psi); });
}

CycloNum epsilon_minor(const PsiMatrix& m, const Character& psi) {
  const PointsStructure& st = m.structure;
  const CycloNum one = CycloNum::from_rational(st.group().p(), st.n(), 1);
  return minor_of(st, psi, one, [&](int row, int col) { return apply_character(m(row, col), psi); });
}

ComplexApprox epsilon_minor(const PointsStructure& st, const std::vector<GroupRingElem<ComplexApprox>>& m,
                            const Character& psi, std::int64_t j_idx) {
  check_size(st, m.size());
  return minor_of(st, psi, ComplexApprox(1.0, 0.0, 0.0),
                  [&](int row, int col) { return apply_character(m[static_cast<std::size_t>(row * st.N() + col)], psi, j_idx); });
}

CycloNum delta_psi(const Character& psi, const PointsStructure& st) {
  const int p = st.group().p(), n = st.n();
  CycloNum d = CycloNum::from_rational(p, n, 1);
  const CycloNum one = d;
  for (int r = 0; r < psi.t(); ++r) {
    const CycloNum f = CycloNum::zeta_power(p, n, psi.a * ipow(p, r)) - one;
    d = d * pow(f, st.m()[static_cast<std::size_t>(r)]);
  }
  return d;
}

int m_psi(const Character& psi, const PointsStructure& st) {
  int s = 0;
  for (int r = psi.t(); r <= st.n(); ++r) s += (st.n() - r) * st.m()[static_cast<std::size_t>(r)];
  return s;
}

}  // namespace mtreg
