#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mtreg {

/// The residue ring Z/p^M with p^M < 2^62.
struct ZpmRing {
  int p = 3;
  int M = 1;
  std::int64_t mod = 3;

  ZpmRing() = default;
  ZpmRing(int p_, int M_);

  std::int64_t norm(std::int64_t a) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const { return norm(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return norm(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  /// Valuation of a residue; M for zero.
  int val(std::int64_t a) const;
  bool is_unit(std::int64_t a) const { return norm(a) % p != 0; }
  std::int64_t inv(std::int64_t unit) const;
};

/// Canonical element of Z/p^M.
struct ResidueInt {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  ResidueInt() = default;
  ResidueInt(std::int64_t v, std::int64_t m);
};

ResidueInt operator+(const ResidueInt& a, const ResidueInt& b);
ResidueInt operator-(const ResidueInt& a, const ResidueInt& b);
ResidueInt operator-(const ResidueInt& a);
ResidueInt operator*(const ResidueInt& a, const ResidueInt& b);
bool operator==(const ResidueInt& a, const ResidueInt& b);

/// Dense row-major matrix over Z/p^M.
class ZpmMatrix {
 public:
  ZpmMatrix() = default;
  ZpmMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static ZpmMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

ZpmMatrix multiply(const ZpmRing& R, const ZpmMatrix& A, const ZpmMatrix& B);
std::vector<std::int64_t> apply(const ZpmRing& R, const ZpmMatrix& A, const std::vector<std::int64_t>& x);

/// U A V = D with D diagonal, diagonal entries p^{e_i} (e_i = M for zero), U and V invertible.
struct SmithForm {
  ZpmMatrix U;
  ZpmMatrix V;
  std::vector<int> exps;
  int rows = 0;
  int cols = 0;
};

SmithForm smith_form(const ZpmRing& R, ZpmMatrix A);

/// Solves A x = b. The solution is the canonical one from the Smith form with every free
/// parameter set to free_value (0 gives the first solution). nullopt when inconsistent.
std::optional<std::vector<std::int64_t>> solve(const ZpmRing& R, const SmithForm& S,
                                                const std::vector<std::int64_t>& b,
                                                std::int64_t free_value = 0);
std::optional<std::vector<std::int64_t>> solve(const ZpmRing& R, const ZpmMatrix& A,
                                                const std::vector<std::int64_t>& b,
                                                std::int64_t free_value = 0);

/// log_p |image(A)|.
long image_log_size(const ZpmRing& R, const ZpmMatrix& A);

/// Determinant is a unit, i.e. A is invertible over Z/p^M (square A only).
bool is_invertible(const ZpmRing& R, const ZpmMatrix& A);

}  // namespace mtreg
