#include "mtreg/bockstein/phi.hpp"

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

namespace {

bool invariant_mod_rho(const GRContext& c, const GRVec& x, int r, int s) {
  auto a = c.rho(x, r);
  const std::size_t q = static_cast<std::size_t>(ipow(c.g.p(), s));
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != a[k % q]) return false;
  return true;
}

}  // namespace

PhiMatrix::PhiMatrix(PointsStructure st, GRMatrix m) : st_(std::move(st)), m_(std::move(m)) {
  const GRContext& c = m_.ctx();
  if (!(c.g == st_.group())) raise(ErrorCode::ShapeError, "phi: group mismatch");
  if (m_.size() != st_.N()) raise(ErrorCode::ShapeError, "phi: size differs from N");
  const int n = st_.n();
  for (int row = 0; row < st_.N(); ++row)
    for (int col = 0; col < st_.N(); ++col) {
      const int r = st_.level(row), s = st_.level(col);
      const GRVec& x = m_(row, col);
      const std::string where = " at " + to_string(st_.at(row)) + "," + to_string(st_.at(col));
      if (s == n) {
        if (!c.is_zero(c.sub(x, row == col ? c.basis(0) : c.zero())))
          raise(ErrorCode::ShapeError, "phi must fix the level-n dual points" + where);
      } else if (r == n) {
        if (!c.is_zero(x)) raise(ErrorCode::ShapeError, "phi: nonzero entry below the upper-left block" + where);
      } else if (r > s && !invariant_mod_rho(c, x, r, s)) {
        raise(ErrorCode::ShapeError, "phi: entry is not J_" + std::to_string(s) + "-invariant" + where);
      }
    }
}

PhiMatrix PhiMatrix::identity(const PointsStructure& st, int M) {
  GRContext c(st.group(), M);
  return PhiMatrix(st, GRMatrix::identity(c, st.N()));
}

PhiMatrix PhiMatrix::inverse() const { return PhiMatrix(st_, mtreg::inverse(m_)); }

int point_coord_offset(const PointsStructure& st, int k) {
  int off = 0;
  for (int i = 0; i < k; ++i) off += static_cast<int>(ipow(st.group().p(), st.level(i)));
  return off;
}

int point_coord_dim(const PointsStructure& st) { return point_coord_offset(st, st.N()); }

ZpmMatrix PhiMatrix::on_points() const {
  const GRContext& c = ctx();
  const int dim = point_coord_dim(st_);
  ZpmMatrix A(dim, dim);
  for (int col = 0; col < st_.N(); ++col) {
    const std::int64_t qs = ipow(c.g.p(), st_.level(col));
    for (std::int64_t k = 0; k < qs; ++k) {
      const int cidx = point_coord_offset(st_, col) + static_cast<int>(k);
      for (int row = 0; row < st_.N(); ++row) {
        auto img = c.rho(c.mul(c.basis(k), m_(row, col)), st_.level(row));
        const int roff = point_coord_offset(st_, row);
        for (std::size_t i = 0; i < img.size(); ++i) A(roff + static_cast<int>(i), cidx) = img[i];
      }
    }
  }
  return A;
}

PhiMatrix random_phi_shape(const PointsStructure& st, int M, std::mt19937_64& rng) {
  GRContext c(st.group(), M);
  GRMatrix m(c, st.N());
  std::uniform_int_distribution<std::int64_t> coef(0, c.R.mod - 1);
  auto random_elem = [&] {
    GRVec v = c.zero();
    for (auto& x : v) x = coef(rng);
    return v;
  };
  const int n = st.n();
  for (int row = 0; row < st.N(); ++row)
    for (int col = 0; col < st.N(); ++col) {
      const int r = st.level(row), s = st.level(col);
      if (s == n) {
        m(row, col) = row == col ? c.basis(0) : c.zero();
      } else if (r == n) {
        m(row, col) = c.zero();
      } else if (r > s) {
        m(row, col) = c.mul(c.from(trace_relative(c.g, s, r)), random_elem());
      } else {
        m(row, col) = random_elem();
      }
    }
  return PhiMatrix(st, m);
}

PhiMatrix random_phi(const PointsStructure& st, int M, std::mt19937_64& rng) {
  for (;;) {
    PhiMatrix phi = random_phi_shape(st, M, rng);
    if (phi.is_invertible()) return phi;
  }
}

}  // namespace mtreg
