#include "mtreg/groupring/fourier.hpp"

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/reconstruct.hpp"

namespace mtreg {

RatElem fourier_invert(const std::vector<CycloNum>& values, const GroupData& g) {
  if (static_cast<std::int64_t>(values.size()) != g.order())
    throw std::invalid_argument("fourier_invert: need one value per character");
  RatElem out = RatElem::zero(g, Rational(0));
  const Rational scale(Integer(1), Integer(static_cast<long>(g.order())));
  for (std::int64_t k = 0; k < g.order(); ++k) {
    CycloNum acc(g.p(), g.n());
    for (std::int64_t a = 0; a < g.order(); ++a)
      acc += values[static_cast<std::size_t>(a)] * CycloNum::zeta_power(g.p(), g.n(), -a * k);
    if (!acc.is_rational())
      raise(ErrorCode::NotGaloisStable, "coefficient of s^" + std::to_string(k) + " is irrational");
    out[k] = scale * acc.constant();
  }
  return out;
}

FloatFourierResult fourier_invert(const std::vector<ComplexApprox>& values, const GroupData& g, std::int64_t j_idx,
                                  double tol, const Integer& max_den) {
  if (static_cast<std::int64_t>(values.size()) != g.order())
    throw std::invalid_argument("fourier_invert: need one value per character");
  FloatFourierResult res{RatElem::zero(g, Rational(0)), {}};
  const ComplexApprox scale = ComplexApprox::from_rational(Rational(Integer(1), Integer(static_cast<long>(g.order()))));
  for (std::int64_t k = 0; k < g.order(); ++k) {
    ComplexApprox acc;
    for (std::int64_t a = 0; a < g.order(); ++a)
      acc = acc + values[static_cast<std::size_t>(a)] *
                      ComplexApprox::root_of_unity(mod_norm(-a * k, g.order()) * j_idx, g.order());
    acc = acc * scale;
    try {
      Reconstruction r = reconstruct_with_margin(acc, tol, max_den);
      res.element[k] = r.value;
      res.margins.push_back(r.margin);
    } catch (const Error& e) {
      throw Error(e.code(), "coefficient of s^" + std::to_string(k) + ": " + e.what());
    }
  }
  return res;
}

bool is_unit_Zp(const RatElem& x) {
  const int p = x.group().p();
  Rational aug = 0;
  for (const auto& c : x.coeffs()) {
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p)))
      raise(ErrorCode::NotPIntegral, "coefficient " + c.get_str() + " is not p-integral");
    aug += c;
  }
  return reduce_rational(aug, p) != 0;
}

bool is_unit_Zp(const IntElem& x) { return is_unit_Zp(to_rational(x)); }

bool ideal_membership(const IntElem& x, int r, int M) {
  const GroupData& g = x.group();
  if (r < 0 || r > g.n()) throw std::invalid_argument("ideal_membership: level out of range");
  ZpmRing R(g.p(), M);
  const int ord = static_cast<int>(g.order());
  // Columns: sigma^k (sigma^{p^r} - 1) and sigma^k Tr_{J_r}, k = 0..|G|-1.
  ZpmMatrix A(ord, 2 * ord);
  auto gen1 = reduce_coeffs(sigma_pow_minus_one(g, r), R);
  auto gen2 = reduce_coeffs(trace_J(g, r), R);
  for (int k = 0; k < ord; ++k)
    for (int i = 0; i < ord; ++i) {
      A((i + k) % ord, k) = R.add(A((i + k) % ord, k), gen1[static_cast<std::size_t>(i)]);
      A((i + k) % ord, ord + k) = R.add(A((i + k) % ord, ord + k), gen2[static_cast<std::size_t>(i)]);
    }
  return solve(R, A, reduce_coeffs(x, R)).has_value();
}

}  // namespace mtreg
