#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtreg/regulator/minor.hpp"
#include "mtreg/regulator/psi.hpp"

namespace mtreg {

/// Heights <sigma^k P^t_row, P_col> for k = 0..|G|-1, either exact rationals or floats with a
/// common absolute error bound. The matrix entry is sum_k h_k sigma^{-k}.
struct HeightMatrix {
  PointsStructure structure;
  std::vector<double> values;                  // (row * N + col) * |G| + k
  double err = 0.0;
  std::optional<std::vector<Rational>> exact;  // same layout

  /// ShapeError on size mismatch, DegenerateRegulator for an identically zero row.
  void validate() const;
  bool is_exact() const { return exact.has_value(); }
  std::vector<RatElem> exact_entries() const;
  std::vector<GroupRingElem<ComplexApprox>> float_entries() const;
};

/// Normalised leading terms indexed by the complex character sigma -> exp(2 pi i b / p^n).
/// Exact values are written in the basis of zeta = exp(2 pi i / p^n).
struct AnalyticInput {
  std::vector<CycloNum> exact;
  std::vector<ComplexApprox> approx;
  bool is_exact() const { return !exact.empty(); }
};

/// Regulator components indexed by the abstract character exponent a. Exact components are in
/// Q(zeta) abstractly; approximate ones are embedded through j_idx.
struct RegulatorComponents {
  int sign = 1;
  std::int64_t j_idx = 1;
  std::vector<CycloNum> exact;
  std::vector<ComplexApprox> approx;
};

/// p^{-2 m_psi} eps_psi(R), exact (needs exact heights).
CycloNum reg_nt_psi(const HeightMatrix& R, const Character& psi);
/// Float version embedded through j_idx; PrecisionExhausted if the interval contains 0.
ComplexApprox reg_nt_psi(const HeightMatrix& R, const Character& psi, std::int64_t j_idx);

/// (-1)^{N - m_n} Reg_psi delta_psi / eps_psi(Psi) for every character. NonUnitEpsilon if some
/// eps_psi(Psi) vanishes; DegenerateRegulator if some eps_psi(R) is exactly zero.
RegulatorComponents assemble_regulator(const HeightMatrix& R, const PsiMatrix& psi, std::int64_t j_idx, bool exact);

struct Verdict {
  std::int64_t j_idx = 1;
  bool pass = false;
  RatElem witness{GroupData(), std::vector<Rational>(3)};
  /// p-adic valuation of each coefficient (nullopt for 0).
  std::vector<std::optional<int>> valuations;
  /// Reconstruction margins in float mode, empty in exact mode.
  std::vector<double> margins;
};

/// x_a = L*_a / component_a, Fourier inversion, integrality and unit test.
Verdict verify_unit_criterion(const AnalyticInput& L, const RegulatorComponents& comp, const GroupData& g, double tol,
                            const Integer& max_den);

/// Abstract character a is read from the complex character b = a j_idx.
std::int64_t complex_index(std::int64_t a, std::int64_t j_idx, const GroupData& g);

}  // namespace mtreg
