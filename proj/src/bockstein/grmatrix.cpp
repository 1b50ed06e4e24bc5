#include "mtreg/bockstein/grmatrix.hpp"

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

GRVec GRContext::basis(std::int64_t k) const {
  GRVec v = zero();
  v[static_cast<std::size_t>(mod_norm(k, g.order()))] = 1;
  return v;
}

GRVec GRContext::add(const GRVec& a, const GRVec& b) const {
  GRVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = R.add(a[i], b[i]);
  return r;
}

GRVec GRContext::sub(const GRVec& a, const GRVec& b) const {
  GRVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = R.sub(a[i], b[i]);
  return r;
}

GRVec GRContext::neg(const GRVec& a) const { return sub(zero(), a); }

GRVec GRContext::mul(const GRVec& a, const GRVec& b) const {
  const std::size_t ord = a.size();
  GRVec r(ord, 0);
  for (std::size_t i = 0; i < ord; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < ord; ++j) {
      std::size_t k = (i + j) % ord;
      r[k] = R.add(r[k], R.mul(a[i], b[j]));
    }
  }
  return r;
}

GRVec GRContext::scale(std::int64_t s, const GRVec& a) const {
  GRVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = R.mul(R.norm(s), a[i]);
  return r;
}

std::int64_t GRContext::eps_fp(const GRVec& a) const {
  std::int64_t s = 0;
  for (auto c : a) s = mod_norm(s + c, R.p);
  return s;
}

std::vector<std::int64_t> GRContext::rho(const GRVec& a, int r) const {
  const std::int64_t q = ipow(g.p(), r);
  std::vector<std::int64_t> out(static_cast<std::size_t>(q), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i % static_cast<std::size_t>(q)] = R.add(out[i % static_cast<std::size_t>(q)], a[i]);
  return out;
}

bool GRContext::is_zero(const GRVec& a) const {
  for (auto c : a)
    if (R.norm(c) != 0) return false;
  return true;
}

IntElem GRContext::lift(const GRVec& a) const {
  IntElem x = IntElem::zero(g, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) x[static_cast<std::int64_t>(i)] = Integer(static_cast<long>(R.norm(a[i])));
  return x;
}

GRMatrix GRMatrix::identity(const GRContext& ctx, int n) {
  GRMatrix I(ctx, n);
  for (int i = 0; i < n; ++i) I(i, i) = ctx.basis(0);
  return I;
}

GRMatrix multiply(const GRMatrix& A, const GRMatrix& B) {
  const GRContext& c = A.ctx();
  GRMatrix C(c, A.size());
  for (int i = 0; i < A.size(); ++i)
    for (int k = 0; k < A.size(); ++k) {
      if (c.is_zero(A(i, k))) continue;
      for (int j = 0; j < A.size(); ++j) C(i, j) = c.add(C(i, j), c.mul(A(i, k), B(k, j)));
    }
  return C;
}

ZpmMatrix expand(const GRMatrix& A) {
  const GRContext& c = A.ctx();
  const int ord = static_cast<int>(c.g.order());
  ZpmMatrix E(A.size() * ord, A.size() * ord);
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j) {
      ZpmMatrix blk = multiplication_matrix(A(i, j), c.g, c.R);
      for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) E(i * ord + a, j * ord + b) = blk(a, b);
    }
  return E;
}

std::int64_t eps_fp_det(const GRMatrix& A) {
  const GRContext& c = A.ctx();
  const int p = c.R.p;
  const int n = A.size();
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.eps_fp(A(i, j));
  std::int64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n && piv < 0; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) piv = i;
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
      det = mod_norm(-det, p);
    }
    const auto& prow = m[static_cast<std::size_t>(col)];
    det = mod_norm(det * prow[static_cast<std::size_t>(col)], p);
    const std::int64_t inv = mod_inv(prow[static_cast<std::size_t>(col)], p);
    for (int i = col + 1; i < n; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const std::int64_t f = mod_norm(row[static_cast<std::size_t>(col)] * inv, p);
      for (int j = col; j < n; ++j) row[static_cast<std::size_t>(j)] = mod_norm(row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)], p);
    }
  }
  return det;
}

GRMatrix inverse(const GRMatrix& A) {
  const GRContext& c = A.ctx();
  const int n = A.size();
  GRMatrix L = A;
  GRMatrix Inv = GRMatrix::identity(c, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n && piv < 0; ++i)
      if (c.eps_fp(L(i, col)) != 0) piv = i;
    if (piv < 0) raise(ErrorCode::ZeroInversion, "matrix over Z/p^M[G] is not invertible");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(L(piv, j), L(col, j));
        std::swap(Inv(piv, j), Inv(col, j));
      }
    const GRVec u = invert_unit(L(col, col), c.g, c.R);
    for (int j = 0; j < n; ++j) {
      L(col, j) = c.mul(u, L(col, j));
      Inv(col, j) = c.mul(u, Inv(col, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || c.is_zero(L(i, col))) continue;
      const GRVec f = L(i, col);
      for (int j = 0; j < n; ++j) {
        L(i, j) = c.sub(L(i, j), c.mul(f, L(col, j)));
        Inv(i, j) = c.sub(Inv(i, j), c.mul(f, Inv(col, j)));
      }
    }
  }
  return Inv;
}

}  // namespace mtreg
