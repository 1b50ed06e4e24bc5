#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "expect_error.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/ffec/pairing.hpp"
#include "mtreg/ffec/poly.hpp"
#include "oracles.hpp"

using namespace mtreg;
using namespace mtreg::testing;

namespace {

std::vector<FqElem> brute_roots_distinct(const FqPoly& f) {
  std::vector<FqElem> out;
  for (const auto& t : all_elements(f.field())) {
    FqElem acc = el(f.field(), 0), pw = el(f.field(), 1);
    for (const auto& c : f.coeffs()) {
      acc = acc + c * pw;
      pw = pw * t;
    }
    if (acc.is_zero()) out.push_back(t);
  }
  return out;
}

FqElem random_elem(std::mt19937_64& rng, const FieldPtr& F) {
  return FqElem::from_index(F, std::uniform_int_distribution<std::int64_t>(0, F->q - 1)(rng));
}

}  // namespace

TEST_CASE("field construction") {
  auto F49 = FqField::make(7, 2);
  CHECK(F49->q == 49);
  CHECK(F49->modulus == std::vector<std::int64_t>{1, 0, 1});
  CHECK_ERROR_CODE(FqField::make(7, {0, 0, 1}), ErrorCode::ShapeError);
  CHECK_ERROR_CODE(FqField::make(9), ErrorCode::ShapeError);
  for (auto F : {FqField::make(5, 2), FqField::make(3, 3), FqField::make(11, 2), FqField::make(2, 4)}) {
    // Multiplicative group is cyclic of order q - 1.
    std::int64_t best = 0;
    for (const auto& x : all_elements(F))
      if (!x.is_zero()) best = std::max(best, multiplicative_order(x));
    CHECK(best == F->q - 1);
    for (std::int64_t i = 0; i < F->q; ++i) CHECK(FqElem::from_index(F, i).index() == i);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (auto F : {FqField::make(7), FqField::make(5, 2), FqField::make(3, 4), FqField::make(11, 2)}) {
    for (int t = 0; t < 200; ++t) {
      FqElem a = random_elem(rng, F), b = random_elem(rng, F), c = random_elem(rng, F);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == el(F, 0));
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
      CHECK(a.pow(F->q) == a);
    }
  }
}

TEST_CASE("ff_roots examples") {
  auto F = FqField::make(7);
  auto r1 = ff_roots(FqPoly::from_ints(F, {-1, 0, 1}));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == el(F, 1));
  CHECK(r1[1] == el(F, 6));
  CHECK(ff_roots(FqPoly::from_ints(F, {1, 0, 1})).empty());
  auto r3 = ff_roots(FqPoly::from_ints(F, {-1, 0, 0, 1}));
  REQUIRE(r3.size() == 3);
  CHECK(r3[0] == el(F, 1));
  CHECK(r3[1] == el(F, 2));
  CHECK(r3[2] == el(F, 4));
  // Brute-force confirmation of the frozen values.
  CHECK(brute_roots_distinct(FqPoly::from_ints(F, {1, 0, 1})).empty());
  CHECK(brute_roots_distinct(FqPoly::from_ints(F, {-1, 0, 0, 1})) == r3);
  CHECK(ff_roots(FqPoly::from_ints(F, {1, 2, 1})) == std::vector<FqElem>{el(F, 6), el(F, 6)});
  CHECK_ERROR_CODE(ff_roots(FqPoly::from_ints(F, {3})), ErrorCode::ShapeError);
}

TEST_CASE("ff_roots agrees with brute force") {
  std::mt19937_64 rng(12);
  for (auto F : {FqField::make(5), FqField::make(7), FqField::make(3, 2), FqField::make(5, 2),
                 FqField::make(7, 2), FqField::make(11, 2), FqField::make(2, 3)}) {
    for (int t = 0; t < 40; ++t) {
      int deg = std::uniform_int_distribution<int>(1, 10)(rng);
      std::vector<FqElem> c;
      for (int i = 0; i < deg; ++i) c.push_back(random_elem(rng, F));
      c.push_back(el(F, 1 + static_cast<std::int64_t>(t % 3) % (F->ell - 1)));
      FqPoly f(F, c);
      auto roots = ff_roots(f);
      std::vector<FqElem> distinct = roots;
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      CHECK(distinct == brute_roots_distinct(f));
      CHECK(std::is_sorted(roots.begin(), roots.end()));

      // Known factorisation: product of chosen linear factors times a rootless factor.
      std::vector<FqElem> chosen;
      int k = std::uniform_int_distribution<int>(1, 6)(rng);
      FqPoly g = FqPoly::from_ints(F, {1});
      for (int i = 0; i < k; ++i) {
        chosen.push_back(random_elem(rng, F));
        g = g * (FqPoly::x(F) - FqPoly::constant(chosen.back()));
      }
      for (int tries = 0; tries < 50; ++tries) {
        FqPoly h(F, {random_elem(rng, F), random_elem(rng, F), el(F, 1)});
        if (brute_roots_distinct(h).empty()) {
          g = g * h;
          break;
        }
      }
      std::sort(chosen.begin(), chosen.end());
      CHECK(ff_roots(g) == chosen);
    }
  }
}

TEST_CASE("group law examples") {
  auto F = FqField::make(7);
  CurveFq E(el(F, 0), el(F, 2));
  CHECK(ec_mul(E, E.point(0, 3), 2) == E.point(0, 4));
  CHECK(ec_mul(E, E.point(0, 3), 0).inf);
  CHECK(ec_mul(E, E.point(3, 1), 2) == E.point(3, 6));
  CHECK(ec_mul(E, E.point(3, 1), 3).inf);
  CHECK(point_count(E) == 9);
  CHECK_ERROR_CODE(E.point(1, 1), ErrorCode::ShapeError);
  CHECK_ERROR_CODE(CurveFq(el(F, 0), el(F, 0)), ErrorCode::ShapeError);
}

TEST_CASE("group law properties and Hasse bound") {
  std::mt19937_64 rng(13);
  for (auto F : {FqField::make(7), FqField::make(13), FqField::make(5, 2), FqField::make(31)}) {
    for (std::int64_t a = 0; a < 4; ++a)
      for (std::int64_t b = 1; b < 4; ++b) {
        FqElem A = el(F, a), B = el(F, b);
        if ((el(F, 4) * A * A * A + el(F, 27) * B * B).is_zero()) continue;
        CurveFq E(A, B);
        auto pts = affine_points(E);
        const std::int64_t N = static_cast<std::int64_t>(pts.size()) + 1;
        CHECK(std::llabs(F->q + 1 - N) <= 2 * std::sqrt(static_cast<double>(F->q)));
        // Point count by Legendre-style scan of x.
        std::int64_t count = 1;
        for (const auto& x : all_elements(F)) {
          FqElem r = x * x * x + A * x + B;
          for (const auto& y : all_elements(F))
            if (y * y == r) ++count;
        }
        CHECK(count == N);
        for (int t = 0; t < 30; ++t) {
          auto P = pts[rng() % pts.size()], Q = pts[rng() % pts.size()], R = pts[rng() % pts.size()];
          CHECK(E.on_curve(ec_add(E, P, Q)));
          CHECK(ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R)));
          CHECK(ec_add(E, P, Q) == ec_add(E, Q, P));
          CHECK(ec_mul(E, P, N).inf);
          std::int64_t k = static_cast<std::int64_t>(rng() % 50);
          ECPoint sum = ECPoint::infinity();
          for (std::int64_t i = 0; i < k; ++i) sum = ec_add(E, sum, P);
          CHECK(ec_mul(E, P, k) == sum);
          CHECK(N % point_order(E, P) == 0);
        }
      }
  }
}

TEST_CASE("find_p_torsion_basis examples") {
  auto F = FqField::make(7);
  CurveFq E(el(F, 0), el(F, 2));
  TorsionBasis B = find_p_torsion_basis(E, 3);
  CHECK(B.S == E.point(0, 3));
  CHECK(B.T == E.point(3, 1));
  CHECK(ec_mul(E, B.S, 3).inf);
  CHECK(ec_mul(E, B.T, 3).inf);
  CHECK(multiplicative_order(B.zeta_res) == 3);
  CHECK(B.zeta_res == weil_pairing(E, B.T, B.S, 3));

  CurveFq E2(el(F, 1), el(F, 0));
  CHECK(point_count(E2) == 8);
  CHECK_ERROR_CODE(find_p_torsion_basis(E2, 3), ErrorCode::NotFullTorsion);
}

TEST_CASE("weil_pairing examples") {
  auto F = FqField::make(7);
  CurveFq E(el(F, 0), el(F, 2));
  auto S = E.point(0, 3), T = E.point(3, 1);
  FqElem e = weil_pairing(E, S, T, 3);
  CHECK((e == el(F, 2) || e == el(F, 4)));
  CHECK(e == el(F, 4));
  CHECK((e * weil_pairing(E, T, S, 3)).is_one());
  CHECK(weil_pairing(E, ec_mul(E, S, 2), T, 3) == e * e);
  CHECK(weil_pairing(E, S, S, 3).is_one());
  CHECK(weil_pairing(E, S, ECPoint::infinity(), 3).is_one());
  CHECK(oracle_weil3(E, S, T) == e);
}

TEST_CASE("weil_pairing matches the flex-line oracle for p = 3") {
  auto curves = full_torsion_curves(3, 199, 2, false);
  auto quad = full_torsion_curves(3, 13, 2, true);
  curves.insert(curves.end(), quad.begin(), quad.end());
  CHECK(curves.size() >= 20);
  for (const auto& E : curves) {
    auto tors = torsion_points(E, 3);
    for (const auto& P : tors)
      for (const auto& Q : tors) {
        auto o = oracle_weil3(E, P, Q);
        REQUIRE(o.has_value());
        CHECK(weil_pairing(E, P, Q, 3) == *o);
      }
  }
}

TEST_CASE("weil_pairing is bilinear, alternating, non-degenerate and Frobenius-equivariant") {
  for (int p : {3, 5}) {
    auto curves = full_torsion_curves(p, 199, 1, false);
    auto quad = full_torsion_curves(p, 13, 2, true);
    curves.insert(curves.end(), quad.begin(), quad.end());
    REQUIRE(!curves.empty());
    for (const auto& E : curves) {
      auto tors = torsion_points(E, p);
      TorsionBasis B = find_p_torsion_basis(E, p);
      CHECK(multiplicative_order(B.zeta_res) == p);
      // Non-degeneracy: e(S, .) is nontrivial on E[p].
      bool nontrivial = false;
      for (const auto& P : tors) {
        CHECK(weil_pairing(E, P, P, p).is_one());
        if (!weil_pairing(E, B.S, P, p).is_one()) nontrivial = true;
        for (const auto& Q : tors) {
          FqElem e = weil_pairing(E, P, Q, p);
          CHECK(e.pow(p).is_one());
          CHECK((e * weil_pairing(E, Q, P, p)).is_one());
          CHECK(weil_pairing(E, ec_add(E, P, B.S), Q, p) == e * weil_pairing(E, B.S, Q, p));
          CHECK(weil_pairing(E, P, ec_add(E, Q, B.T), p) == e * weil_pairing(E, P, B.T, p));
          CHECK(weil_pairing(E, ec_frobenius(P), ec_frobenius(Q), p) == e.frobenius());
        }
      }
      CHECK(nontrivial);
    }
  }
}

TEST_CASE("descent_eval examples") {
  auto F = FqField::make(7);
  CurveFq E(el(F, 0), el(F, 2));
  TorsionBasis B = find_p_torsion_basis(E, 3);
  auto pts = affine_points(E);
  pts.push_back(ECPoint::infinity());
  for (const auto& Q0 : pts) CHECK(descent_eval(E, B.S, ec_mul(E, Q0, 3), B.zeta_res, 3) == 0);
  // Q in {S, inf} go through the shift rule.
  CHECK(descent_eval(E, B.S, ECPoint::infinity(), B.zeta_res, 3) == 0);
  std::int64_t cs = descent_eval(E, B.S, B.S, B.zeta_res, 3);
  CHECK(mod_norm(cs + descent_eval(E, B.S, ec_neg(E, B.S), B.zeta_res, 3), 3) == 0);
}

TEST_CASE("descent_eval matches the flex-line oracle and is additive") {
  std::mt19937_64 rng(14);
  auto curves = full_torsion_curves(3, 199, 1, false);
  auto quad = full_torsion_curves(3, 13, 1, true);
  curves.insert(curves.end(), quad.begin(), quad.end());
  for (const auto& E : curves) {
    TorsionBasis B = find_p_torsion_basis(E, 3);
    const std::int64_t q = E.field()->q;
    auto pts = affine_points(E);
    for (const auto& S : torsion_points(E, 3)) {
      if (S.inf) continue;
      for (const auto& Q : pts) {
        auto v = flex_function(E, S, Q);
        if (!v) continue;
        CHECK(descent_eval(E, S, Q, B.zeta_res, 3) == mu_p_log(v->pow((q - 1) / 3), B.zeta_res, 3));
      }
      for (int t = 0; t < 20; ++t) {
        auto Q = pts[rng() % pts.size()], Q2 = pts[rng() % pts.size()];
        std::int64_t lhs = descent_eval(E, S, Q, B.zeta_res, 3) + descent_eval(E, S, Q2, B.zeta_res, 3);
        CHECK(mod_norm(lhs, 3) == descent_eval(E, S, ec_add(E, Q, Q2), B.zeta_res, 3));
      }
    }
  }
  for (int p : {5}) {
    for (const auto& E : full_torsion_curves(p, 199, 1, false)) {
      TorsionBasis B = find_p_torsion_basis(E, p);
      auto pts = affine_points(E);
      for (int t = 0; t < 20; ++t) {
        auto Q = pts[rng() % pts.size()], Q2 = pts[rng() % pts.size()];
        std::int64_t lhs = descent_eval(E, B.S, Q, B.zeta_res, p) + descent_eval(E, B.S, Q2, B.zeta_res, p);
        CHECK(mod_norm(lhs, p) == descent_eval(E, B.S, ec_add(E, Q, Q2), B.zeta_res, p));
        CHECK(descent_eval(E, B.T, ec_mul(E, Q, p), B.zeta_res, p) == 0);
      }
    }
  }
}
