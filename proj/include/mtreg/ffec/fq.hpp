#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mtreg {

/// F_q = F_l[x]/(f) with f monic irreducible of degree d. Coefficients low degree first.
struct FqField {
  std::int64_t ell = 0;
  int d = 1;
  std::int64_t q = 0;
  std::vector<std::int64_t> modulus;  // size d + 1, monic

  /// Smallest monic irreducible modulus in canonical order (x for d = 1).
  static std::shared_ptr<const FqField> make(std::int64_t ell, int d = 1);
  /// Explicit modulus; ShapeError when it is not monic irreducible.
  static std::shared_ptr<const FqField> make(std::int64_t ell, std::vector<std::int64_t> modulus);
};

using FieldPtr = std::shared_ptr<const FqField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

class FqElem {
 public:
  FqElem() = default;
  /// Any-length coefficient list, reduced modulo the field modulus.
  FqElem(FieldPtr F, std::vector<std::int64_t> coeffs);

  static FqElem from_int(FieldPtr F, std::int64_t v);
  /// Inverse of index().
  static FqElem from_index(FieldPtr F, std::int64_t idx);
  /// Class of x.
  static FqElem gen(FieldPtr F);

  const FieldPtr& field() const { return F_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  /// Position in the canonical order: sum c_i l^{d-1-i}, lexicographic on (c_0, c_1, ...).
  std::int64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  FqElem inv() const;  // ZeroInversion on zero
  FqElem pow(std::int64_t e) const;
  FqElem frobenius() const { return pow(F_->ell); }

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }
  friend bool operator==(const FqElem& a, const FqElem& b);
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
  friend bool operator<(const FqElem& a, const FqElem& b) { return a.index() < b.index(); }

 private:
  FieldPtr F_;
  std::vector<std::int64_t> c_;
};

/// All q elements in canonical order.
std::vector<FqElem> all_elements(const FieldPtr& F);

/// Multiplicative order of a nonzero element.
std::int64_t multiplicative_order(const FqElem& x);

/// k in [0, p) with zeta^k = x, zeta of order p; NotRootOfUnity otherwise.
std::int64_t mu_p_log(const FqElem& x, const FqElem& zeta, int p);

std::string to_string(const FqElem& x);

}  // namespace mtreg
