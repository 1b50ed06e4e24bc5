#include "mtreg/exactalg/zpm.hpp"

#include <stdexcept>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

ZpmRing::ZpmRing(int p_, int M_) : p(p_), M(M_), mod(1) {
  if (p_ < 2 || M_ < 1) throw std::invalid_argument("ZpmRing: bad parameters");
  for (int i = 0; i < M_; ++i) {
    if (mod > (std::int64_t{1} << 62) / p_) throw std::invalid_argument("ZpmRing: p^M too large");
    mod *= p_;
  }
}

std::int64_t ZpmRing::norm(std::int64_t a) const { return mod_norm(a, mod); }

std::int64_t ZpmRing::mul(std::int64_t a, std::int64_t b) const { return mod_norm(mod_mul(a, b, mod), mod); }

int ZpmRing::val(std::int64_t a) const {
  a = norm(a);
  if (a == 0) return M;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

std::int64_t ZpmRing::inv(std::int64_t unit) const { return mod_inv(unit, mod); }

ResidueInt::ResidueInt(std::int64_t v, std::int64_t m) : value(mod_norm(v, m)), modulus(m) {}

ResidueInt operator+(const ResidueInt& a, const ResidueInt& b) { return {a.value + b.value, a.modulus}; }
ResidueInt operator-(const ResidueInt& a, const ResidueInt& b) { return {a.value - b.value, a.modulus}; }
ResidueInt operator-(const ResidueInt& a) { return {-a.value, a.modulus}; }
ResidueInt operator*(const ResidueInt& a, const ResidueInt& b) {
  return {mod_mul(a.value, b.value, a.modulus), a.modulus};
}
bool operator==(const ResidueInt& a, const ResidueInt& b) { return a.value == b.value && a.modulus == b.modulus; }

ZpmMatrix ZpmMatrix::identity(int n) {
  ZpmMatrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

bool ZpmMatrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

ZpmMatrix multiply(const ZpmRing& R, const ZpmMatrix& A, const ZpmMatrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("multiply: shape mismatch");
  ZpmMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      std::int64_t a = A(i, k);
      if (a == 0) continue;
      for (int j = 0; j < B.cols(); ++j) C(i, j) = R.add(C(i, j), R.mul(a, B(k, j)));
    }
  return C;
}

std::vector<std::int64_t> apply(const ZpmRing& R, const ZpmMatrix& A, const std::vector<std::int64_t>& x) {
  if (static_cast<int>(x.size()) != A.cols()) throw std::invalid_argument("apply: shape mismatch");
  std::vector<std::int64_t> y(static_cast<std::size_t>(A.rows()), 0);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) y[i] = R.add(y[i], R.mul(A(i, j), x[j]));
  return y;
}

namespace {

void row_axpy(const ZpmRing& R, ZpmMatrix& A, int dst, int src, std::int64_t t) {
  // row dst -= t * row src
  for (int j = 0; j < A.cols(); ++j) A(dst, j) = R.sub(A(dst, j), R.mul(t, A(src, j)));
}

void col_axpy(const ZpmRing& R, ZpmMatrix& A, int dst, int src, std::int64_t t) {
  for (int i = 0; i < A.rows(); ++i) A(i, dst) = R.sub(A(i, dst), R.mul(t, A(i, src)));
}

void swap_rows(ZpmMatrix& A, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
}

void swap_cols(ZpmMatrix& A, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
}

}  // namespace

SmithForm smith_form(const ZpmRing& R, ZpmMatrix A) {
  SmithForm S;
  S.rows = A.rows();
  S.cols = A.cols();
  S.U = ZpmMatrix::identity(A.rows());
  S.V = ZpmMatrix::identity(A.cols());
  int k_max = std::min(A.rows(), A.cols());
  S.exps.assign(static_cast<std::size_t>(k_max), R.M);
  for (int k = 0; k < k_max; ++k) {
    int best = R.M, bi = -1, bj = -1;
    for (int i = k; i < A.rows() && best > 0; ++i)
      for (int j = k; j < A.cols(); ++j) {
        int v = R.val(A(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;  // remaining block is zero
    swap_rows(A, k, bi);
    swap_rows(S.U, k, bi);
    swap_cols(A, k, bj);
    swap_cols(S.V, k, bj);
    std::int64_t pe = ipow(R.p, best);
    std::int64_t unit = A(k, k) / pe;
    std::int64_t uinv = R.inv(unit);
    for (int j = 0; j < A.cols(); ++j) A(k, j) = R.mul(A(k, j), uinv);
    for (int j = 0; j < S.U.cols(); ++j) S.U(k, j) = R.mul(S.U(k, j), uinv);
    for (int i = 0; i < A.rows(); ++i) {
      if (i == k || A(i, k) == 0) continue;
      std::int64_t t = A(i, k) / pe;
      row_axpy(R, A, i, k, t);
      row_axpy(R, S.U, i, k, t);
    }
    for (int j = k + 1; j < A.cols(); ++j) {
      if (A(k, j) == 0) continue;
      std::int64_t t = A(k, j) / pe;
      col_axpy(R, A, j, k, t);
      col_axpy(R, S.V, j, k, t);
    }
    S.exps[static_cast<std::size_t>(k)] = best;
  }
  return S;
}

std::optional<std::vector<std::int64_t>> solve(const ZpmRing& R, const SmithForm& S,
                                                const std::vector<std::int64_t>& b, std::int64_t free_value) {
  if (static_cast<int>(b.size()) != S.rows) throw std::invalid_argument("solve: rhs length mismatch");
  std::vector<std::int64_t> c = apply(R, S.U, b);
  std::vector<std::int64_t> y(static_cast<std::size_t>(S.cols), R.norm(free_value));
  for (int i = 0; i < S.rows; ++i) {
    int e = i < static_cast<int>(S.exps.size()) ? S.exps[i] : R.M;
    if (e >= R.M) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    std::int64_t pe = ipow(R.p, e);
    if (c[i] % pe != 0) return std::nullopt;
    // y_i is determined modulo p^{M-e}; the free part is free_value * p^{M-e}.
    y[i] = R.norm(c[i] / pe + R.mul(free_value, R.mod / pe));
  }
  return apply(R, S.V, y);
}

std::optional<std::vector<std::int64_t>> solve(const ZpmRing& R, const ZpmMatrix& A,
                                                const std::vector<std::int64_t>& b, std::int64_t free_value) {
  return solve(R, smith_form(R, A), b, free_value);
}

long image_log_size(const ZpmRing& R, const ZpmMatrix& A) {
  SmithForm S = smith_form(R, A);
  long total = 0;
  for (int e : S.exps) total += R.M - e;
  return total;
}

bool is_invertible(const ZpmRing& R, const ZpmMatrix& A) {
  if (A.rows() != A.cols()) return false;
  SmithForm S = smith_form(R, A);
  for (int e : S.exps)
    if (e != 0) return false;
  return true;
}

}  // namespace mtreg
