#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "expect_error.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/groupring/fourier.hpp"
#include "mtreg/regulator/regulator.hpp"
#include "synthetic.hpp"

using namespace mtreg;

namespace {

PointsStructure S(int n, std::vector<int> m) { return PointsStructure(GroupData(3, n), std::move(m)); }

CycloNum zeta(int n, std::int64_t k) { return CycloNum::zeta_power(3, n, k); }
CycloNum one(int n) { return CycloNum::from_rational(3, n, 1); }

// Leibniz expansion.
CycloNum leibniz(const std::vector<std::vector<CycloNum>>& a, int n) {
  const int N = static_cast<int>(a.size());
  std::vector<int> perm(static_cast<std::size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  CycloNum det = CycloNum(3, n);
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    CycloNum term = one(n);
    for (int i = 0; i < N; ++i) term = term * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    det = inv % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

const std::vector<PointsStructure>& round_trip_structures() {
  static const std::vector<PointsStructure> v{S(1, {1, 0}), S(1, {1, 1}), S(1, {2, 1}), S(1, {0, 2}),
                                             S(2, {1, 0, 0}), S(2, {1, 1, 0}), S(2, {0, 1, 1}), S(2, {1, 1, 1})};
  return v;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int N = 0; N <= 5; ++N)
    for (int t = 0; t < 4; ++t) {
      std::vector<std::vector<CycloNum>> a;
      for (int i = 0; i < N; ++i) {
        std::vector<CycloNum> row;
        for (int j = 0; j < N; ++j) row.push_back(CycloNum(3, 2, {d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)}));
        a.push_back(row);
      }
      CHECK(determinant(a, one(2)) == leibniz(a, 2));
    }
}

TEST_CASE("epsilon minor examples") {
  PointsStructure st = S(1, {1, 1});
  PsiMatrix psi = PsiMatrix::identity(st);
  psi(0, 0) = Integer(2) * IntElem::one(st.group(), Integer(0));
  CHECK(epsilon_minor(psi, Character(st.group(), 0)) == CycloNum::from_rational(3, 1, 2));
  CHECK(epsilon_minor(psi, Character(st.group(), 1)) == one(1));
  CHECK(epsilon_minor(psi, Character(st.group(), 2)) == one(1));
  CHECK(minor_indices(st, 1) == std::vector<int>{1});
  // Trivial character: full determinant.
  PsiMatrix q = PsiMatrix::identity(S(1, {2, 0}));
  const GroupData& g = q.structure.group();
  q(0, 0) = IntElem::basis(g, 1, Integer(0));
  q(0, 1) = Integer(3) * IntElem::one(g, Integer(0));
  q(1, 0) = IntElem::basis(g, 2, Integer(0));
  q(1, 1) = Integer(2) * IntElem::one(g, Integer(0));
  CHECK(epsilon_minor(q, Character(g, 0)) == CycloNum::from_rational(3, 1, -1));
  // Faithful characters see only level-n indices.
  CHECK(epsilon_minor(q, Character(g, 1)) == one(1));
}

TEST_CASE("delta and m_psi") {
  PointsStructure st = S(2, {1, 1, 0});
  const GroupData& g = st.group();
  CHECK(delta_psi(Character(g, 0), st) == one(2));
  CHECK(delta_psi(Character(g, 1), st) == (zeta(2, 1) - one(2)) * (zeta(2, 3) - one(2)));
  CHECK(delta_psi(Character(g, 3), st) == zeta(2, 3) - one(2));
  CHECK(delta_psi(Character(S(1, {1, 0}).group(), 1), S(1, {1, 0})) == zeta(1, 1) - one(1));
  CHECK(m_psi(Character(GroupData(3, 1), 0), S(1, {2, 1})) == 2);
  CHECK(m_psi(Character(GroupData(3, 1), 1), S(1, {2, 1})) == 0);
  CHECK(m_psi(Character(g, 0), S(2, {1, 2, 3})) == 2 + 2);
  CHECK(m_psi(Character(g, 3), S(2, {1, 2, 3})) == 2);
}

TEST_CASE("solve_psi examples and validation") {
  PointsStructure st = S(1, {1, 1});
  const GroupData& g = st.group();
  MTTable t{st, {}};
  t.entries[{0, 0}] = aug_family(g, 0, {2});
  PsiMatrix psi = solve_psi(t);
  CHECK(psi(0, 0) == Integer(2) * IntElem::one(g, Integer(0)));
  CHECK(psi(1, 1) == IntElem::one(g, Integer(0)));
  CHECK(psi(0, 1) == IntElem::zero(g, Integer(0)));

  PointsStructure st2 = S(2, {1, 1, 0});
  const GroupData& g2 = st2.group();
  MTTable t2{st2, {}};
  t2.entries[{0, 0}] = aug_family(g2, 0, {1});
  t2.entries[{0, 1}] = aug_family(g2, 1, {1});
  t2.entries[{1, 0}] = aug_family(g2, 1, {0, 0, 0});
  t2.entries[{1, 1}] = aug_family(g2, 1, {1, 2, 0});
  PsiMatrix psi2 = solve_psi(t2);
  CHECK(psi2(0, 1) == IntElem::one(g2, Integer(0)));
  CHECK(psi2(1, 1)[1] == 2);
  CHECK(satisfies_table(psi2, t2));

  MTTable bad = t2;
  bad.entries[{0, 1}] = aug_family(g2, 0, {1});
  CHECK_ERROR_CODE(solve_psi(bad), ErrorCode::TableLevelMismatch);
  bad = t2;
  bad.entries.erase({1, 1});
  CHECK_ERROR_CODE(solve_psi(bad), ErrorCode::TableLevelMismatch);
  bad = t2;
  bad.entries[{1, 0}] = aug_family(g2, 1, {0, 1, 0});
  CHECK_ERROR_CODE(solve_psi(bad), ErrorCode::TableLevelMismatch);
  bad = t2;
  bad.entries[{1, 1}] = aug_family(g2, 1, {1, 2});
  CHECK_ERROR_CODE(solve_psi(bad), ErrorCode::TableLevelMismatch);

  // Zero table: canonical Psi is zero in the upper-left block and the trivial eps vanishes.
  MTTable zero{st, {}};
  zero.entries[{0, 0}] = aug_family(g, 0, {0});
  PsiMatrix z = solve_psi(zero);
  CHECK_FALSE(det_is_unit(z));
  std::mt19937_64 rng(4);
  HeightMatrix h = testing::random_heights(st, rng);
  CHECK_ERROR_CODE(assemble_regulator(h, z, 1, true), ErrorCode::NonUnitEpsilon);
}

TEST_CASE("regulator components: block structure cases") {
  std::mt19937_64 rng(8);
  // Projective case: Psi = I, no delta at faithful characters, sign +1.
  PointsStructure proj = S(1, {0, 2});
  HeightMatrix h = testing::random_heights(proj, rng);
  RegulatorComponents c = assemble_regulator(h, PsiMatrix::identity(proj), 1, true);
  CHECK(c.sign == 1);
  for (const Character& chi : Character::all(proj.group()))
    CHECK(c.exact[static_cast<std::size_t>(chi.a)] == reg_nt_psi(h, chi) * delta_psi(chi, proj));
  CHECK(delta_psi(Character(proj.group(), 1), proj) == one(1));

  // Faithful characters: (-1)^{N - m_n} eps(R) delta.
  PointsStructure st = S(1, {1, 1});
  h = testing::random_heights(st, rng);
  MTTable t = testing::random_table(st, rng);
  c = assemble_regulator(h, solve_psi(t), 1, true);
  CHECK(c.sign == -1);
  const Character f(st.group(), 1);
  CHECK(c.exact[1] == Rational(-1) * epsilon_minor(st, h.exact_entries(), f) * delta_psi(f, st));

  // Heights making psi(R) the identity: Reg = p^{-2 m_psi}.
  PointsStructure st1 = S(1, {2, 0});
  HeightMatrix id{st1, {}, 0.0, std::vector<Rational>(12, Rational(0))};
  (*id.exact)[0] = 1;   // <P^t_0, P_0> = 1 at sigma^0
  (*id.exact)[9] = 1;   // <P^t_1, P_1>
  id.values.assign(12, 0.0);
  id.values[0] = id.values[9] = 1.0;
  for (const Character& chi : Character::all(st1.group()))
    CHECK(reg_nt_psi(id, chi) == CycloNum::from_rational(3, 1, Rational(1, ipow(3, 2 * m_psi(chi, st1)))));
  ComplexApprox r0 = reg_nt_psi(id, Character(st1.group(), 0), 1);
  CHECK(std::abs(r0.re - 1.0 / 81.0) < 1e-12);

  HeightMatrix zero_row = id;
  (*zero_row.exact)[9] = 0;
  zero_row.values[9] = 0.0;
  CHECK_ERROR_CODE(zero_row.validate(), ErrorCode::DegenerateRegulator);
}

TEST_CASE("verify: trivial and scaled inputs") {
  GroupData g(3, 1);
  RegulatorComponents comp;
  AnalyticInput L;
  for (int a = 0; a < 3; ++a) {
    comp.exact.push_back(one(1));
    L.exact.push_back(one(1));
  }
  Verdict v = verify_unit_criterion(L, comp, g, 1e-8, Integer(1000));
  CHECK(v.pass);
  CHECK(v.witness == to_rational(IntElem::one(g, Integer(0))));
  for (auto& x : L.exact) x = Rational(3) * x;
  v = verify_unit_criterion(L, comp, g, 1e-8, Integer(1000));
  CHECK_FALSE(v.pass);
  CHECK(v.valuations[0] == 1);
}

TEST_CASE("synthetic round trip, exact and float") {
  std::mt19937_64 rng(2024);
  for (const auto& st : round_trip_structures())
    for (bool exact : {true, false})
      for (int t = 0; t < 3; ++t) {
        testing::SyntheticCase c = testing::make_synthetic(st, rng, exact);
        Verdict v = testing::run_verify(c, 1);
        CHECK(v.pass);
        CHECK(v.witness == to_rational(c.u));
        if (!exact)
          for (double m : v.margins) CHECK(m > 0.0);
        Verdict s = testing::run_verify(testing::scaled_by_p(c), 1);
        CHECK_FALSE(s.pass);
        for (std::size_t i = 0; i < v.valuations.size(); ++i) {
          CHECK(v.valuations[i].has_value() == s.valuations[i].has_value());
          if (v.valuations[i]) CHECK(*s.valuations[i] == *v.valuations[i] + 1);
        }
      }
}

TEST_CASE("verdict invariance under j_idx and generator change") {
  std::mt19937_64 rng(77);
  for (const auto& st : round_trip_structures())
    for (bool exact : {true, false}) {
      testing::SyntheticCase c = testing::make_synthetic(st, rng, exact);
      testing::SyntheticCase scaled = testing::scaled_by_p(c);
      const std::int64_t ord = st.group().order();
      for (std::int64_t j = 1; j < ord; ++j) {
        if (j % 3 == 0) continue;
        CAPTURE(j);
        Verdict v = testing::run_verify(c, j);
        CHECK(v.pass);
        CHECK(v.witness == to_rational(c.u));
        CHECK_FALSE(testing::run_verify(scaled, j).pass);
      }
      for (std::int64_t k = 2; k < ord; ++k) {
        if (k % 3 == 0) continue;
        CAPTURE(k);
        CHECK(testing::run_verify(testing::change_generator(c, k), 1).pass);
        CHECK_FALSE(testing::run_verify(testing::change_generator(scaled, k), 1).pass);
      }
    }
}

TEST_CASE("float precision failures are reported") {
  std::mt19937_64 rng(3);
  testing::SyntheticCase c = testing::make_synthetic(S(1, {1, 1}), rng, false, 0.5);
  bool thrown = false;
  try {
    testing::run_verify(c, 1);
  } catch (const Error& e) {
    thrown = true;
    CHECK(e.code() == ErrorCode::PrecisionExhausted);
  }
  CHECK(thrown);
  CHECK_ERROR_CODE(testing::run_verify(testing::make_synthetic(S(1, {1, 1}), rng, true), 3), ErrorCode::BadExponent);
}
