#include <fstream>
#include <random>

#include "doctest.h"
#include "expect_error.hpp"
#include "mtreg/cli/pairing_section.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/mazurtate/pairing.hpp"

using namespace mtreg;

namespace {

nlohmann::json load_json(const std::string& name) {
  std::ifstream in(std::string(MTREG_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

const nlohmann::json& toy_json() {
  static const nlohmann::json j = load_json("toy_pairing.json");
  return j;
}

const PairingCase& toy() {
  static const PairingCase c = cli::parse_pairing_pipeline(toy_json().at("pairing_pipeline"), 3).pcase;
  return c;
}

SelmerElem constant(const PairingCase& c, const FElem& a) {
  SelmerElem h;
  h.h.assign(c.torsion_poly.size() - 1, c.nf.from_rational(0));
  h.h[0] = a;
  return h;
}

const PlaceRestrictionData& place(const PairingCase& c, const std::string& label) {
  for (const auto& pr : c.places)
    if (pr.place.label == label) return pr;
  FAIL("no place " << label);
  throw 0;
}

}  // namespace

TEST_CASE("number field data: cyclic cubic and validation") {
  const PairingCase& c = toy();
  const NumberFieldData& nf = c.nf;
  CHECK(nf.degree() == 3);
  FElem theta{0, 1, 0};
  // sigma(theta) = theta^2 - 2, sigma^3 = id.
  CHECK(nf.act(1, theta) == FElem{-2, 0, 1});
  CHECK(nf.act(3, theta) == theta);
  CHECK(nf.act(-1, nf.act(1, theta)) == theta);
  // theta * sigma(theta) * sigma^2(theta) = 1 (the norm of theta).
  CHECK(nf.mul(nf.mul(theta, nf.act(1, theta)), nf.act(2, theta)) == nf.from_rational(1));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int t = 0; t < 50; ++t) {
    FElem a{dist(rng), dist(rng), dist(rng)}, b{dist(rng), dist(rng), dist(rng)};
    CHECK(nf.act(1, nf.mul(a, b)) == nf.mul(nf.act(1, a), nf.act(1, b)));
    CHECK(nf.act(1, nf.add(a, b)) == nf.add(nf.act(1, a), nf.act(1, b)));
  }

  auto sigma = nf.sigma();
  CHECK_ERROR_CODE(NumberFieldData({-1, -2, 1, 2}, sigma), ErrorCode::ShapeError);
  auto bad = sigma;
  bad[0][1] = 5;
  CHECK_ERROR_CODE(NumberFieldData(nf.poly(), bad), ErrorCode::ShapeError);
  CHECK_ERROR_CODE(NumberFieldData({0, 1}, {{2}}), ErrorCode::ShapeError);
  std::vector<std::vector<Rational>> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_ERROR_CODE(NumberFieldData(nf.poly(), id), ErrorCode::ShapeError);
}

TEST_CASE("galois ring valuations") {
  GaloisRing R(FqField::make(13, 1), 3);
  CHECK(R.valuation(R.from_int(0)) == 3);
  CHECK(R.valuation(R.from_int(13 * 5)) == 1);
  CHECK(R.unit_residue(R.from_int(13 * 5)) == FqElem::from_int(R.residue(), 5));
  CHECK(R.valuation(R.from_rational(Rational(1, 7))) == 0);
  CHECK(R.residue_of(R.from_rational(Rational(1, 7))) == FqElem::from_int(R.residue(), 2));
  CHECK_ERROR_CODE(R.from_rational(Rational(1, 13)), ErrorCode::BadReduction);
  CHECK_ERROR_CODE(R.unit_residue(R.from_int(13 * 13 * 13)), ErrorCode::BadReduction);

  GaloisRing R2(FqField::make(5, 2), 2);
  for (std::int64_t a = -30; a <= 30; a += 7)
    for (std::int64_t b = -30; b <= 30; b += 11) {
      auto x = R2.from_int(a), y = R2.from_int(b);
      CHECK(R2.residue_of(R2.mul(x, y)) == R2.residue_of(x) * R2.residue_of(y));
      CHECK(R2.residue_of(R2.add(x, y)) == R2.residue_of(x) + R2.residue_of(y));
    }
}

TEST_CASE("trace preimage") {
  ZpmMatrix cyc(3, 3);
  for (int j = 0; j < 3; ++j) cyc((j + 1) % 3, j) = 1;
  // Free module of rank 1: Tr = all-ones matrix.
  auto x = trace_preimage({1, 1, 1}, cyc, 3);
  CHECK((x[0] + x[1] + x[2]) % 3 == 1);
  auto x1 = trace_preimage({1, 1, 1}, cyc, 3, 1);
  CHECK(mod_norm(x1[0] + x1[1] + x1[2], 3) == 1);
  auto z = trace_preimage({0, 0, 0}, cyc, 3);
  CHECK(z == std::vector<std::int64_t>{0, 0, 0});
  CHECK_ERROR_CODE(trace_preimage({1, 2, 0}, cyc, 3), ErrorCode::NoPreimage);
  // Trivial action: Tr = 3 = 0 over F_3.
  CHECK_ERROR_CODE(trace_preimage({1, 0}, ZpmMatrix::identity(2), 3), ErrorCode::NoPreimage);

  // Oracle: every preimage found satisfies Tr x = xt, over all of F_3^3.
  const ZpmRing F(3, 1);
  ZpmMatrix tr(3, 3);
  ZpmMatrix pw = ZpmMatrix::identity(3);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) tr(i, j) = mod_norm(tr(i, j) + pw(i, j), 3);
    pw = multiply(F, pw, cyc);
  }
  for (int a = 0; a < 27; ++a) {
    std::vector<std::int64_t> v{a % 3, a / 3 % 3, a / 9};
    auto img = apply(F, tr, v);
    for (std::int64_t fv : {0, 1, 2}) CHECK(apply(F, tr, trace_preimage(img, cyc, 3, fv)) == img);
  }
}

TEST_CASE("g_act and selmer_mul") {
  const PairingCase& c = toy();
  const SelmerElem& a = c.selmer.generators[0];
  CHECK(g_act(c.nf, 0, a).h == a.h);
  CHECK(g_act(c.nf, 3, a).h == a.h);
  // Action matrix: sigma . gen_j = gen_{j+1}.
  for (int j = 0; j < 3; ++j) CHECK(g_act(c.nf, 1, c.selmer.generators[j]).h == c.selmer.generators[(j + 1) % 3].h);
  SelmerElem r = constant(c, c.nf.from_rational(Rational(5, 7)));
  CHECK(g_act(c.nf, 1, r).h == r.h);
  SelmerElem one = constant(c, c.nf.from_rational(1));
  CHECK(selmer_mul(c.nf, c.torsion_poly, a, one).h == a.h);
}

TEST_CASE("restriction at places") {
  const PairingCase& c = toy();
  const auto& w13 = place(c, "w13");
  auto one = restrict_to(c.nf, constant(c, c.nf.from_rational(1)), w13);
  for (const auto& [k, cls] : one) CHECK((cls.v == 0 && cls.e == 0));
  // A cube is trivial.
  auto cube = restrict_to(c.nf, constant(c, c.nf.from_rational(8)), w13);
  for (const auto& [k, cls] : cube) CHECK((cls.v == 0 && cls.e == 0));
  // 13 has valuation 1 in every coordinate.
  auto thirteen = restrict_to(c.nf, constant(c, c.nf.from_rational(13)), w13);
  for (const auto& [k, cls] : thirteen) CHECK(cls.v == 1);
  CHECK_ERROR_CODE(restrict_to(c.nf, constant(c, c.nf.from_rational(Rational(1, 13))), w13), ErrorCode::BadReduction);

  // Multiplicativity against selmer_mul with random h.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-5, 5);
  auto rand_h = [&] {
    SelmerElem h;
    for (std::size_t i = 0; i + 1 < c.torsion_poly.size(); ++i) h.h.push_back(FElem{dist(rng), dist(rng), dist(rng)});
    return h;
  };
  int tested = 0;
  for (int t = 0; t < 40; ++t) {
    SelmerElem a = rand_h(), b = rand_h();
    for (const auto& pr : c.places) {
      try {
        auto ra = restrict_to(c.nf, a, pr), rb = restrict_to(c.nf, b, pr);
        auto rab = restrict_to(c.nf, selmer_mul(c.nf, c.torsion_poly, a, b), pr);
        auto sum = combine({ra, rb}, {1, 1}, 3);
        CHECK(rab == sum);
        ++tested;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadReduction);
      }
    }
  }
  CHECK(tested > 40);
}

TEST_CASE("validate_place rejects inconsistent data") {
  const PairingCase& c = toy();
  auto pr = place(c, "w13");
  pr.root_images.erase("T");
  CHECK_ERROR_CODE(validate_place(c.nf, c.torsion_poly, c.lambda, pr), ErrorCode::InconsistentPlaces);
  pr = place(c, "w13");
  pr.root_images["S"][0] += 1;
  CHECK_ERROR_CODE(validate_place(c.nf, c.torsion_poly, c.lambda, pr), ErrorCode::InconsistentPlaces);
  pr = place(c, "w13");
  pr.basis_images[1][0] += 1;
  CHECK_ERROR_CODE(validate_place(c.nf, c.torsion_poly, c.lambda, pr), ErrorCode::ShapeError);
  pr = place(c, "w13");
  pr.basis_images.pop_back();
  CHECK_ERROR_CODE(validate_place(c.nf, c.torsion_poly, c.lambda, pr), ErrorCode::ShapeError);
}

TEST_CASE("pairing section parse errors carry the JSON path") {
  auto j = toy_json().at("pairing_pipeline");
  j["places"][0]["basis_hint"]["S"] = {{4}, {1}};
  try {
    cli::parse_pairing_pipeline(j, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentPlaces);
    CHECK(std::string(e.what()).find("places[0]") != std::string::npos);
  }
  j = toy_json().at("pairing_pipeline");
  j["selmer"].erase("action");
  CHECK_ERROR_CODE(cli::parse_pairing_pipeline(j, 3), ErrorCode::SchemaError);
  j = toy_json().at("pairing_pipeline");
  j["selmer"]["action"] = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  CHECK_ERROR_CODE(cli::parse_pairing_pipeline(j, 3), ErrorCode::SchemaError);
}

TEST_CASE("mt_pair: fixture values") {
  const PairingCase& c = toy();
  for (const auto& [key, val] : toy_json().at("expected_pairings").items()) {
    auto comma = key.find(',');
    const std::string P = key.substr(0, comma), Q = key.substr(comma + 1);
    CAPTURE(key);
    PairResult r = mt_pair(c, P, Q);
    CHECK(r.neg_exponent == val.get<int>());
    CHECK(r.pairing(GroupData(3, 1)).exponent() == mod_norm(-val.get<int>(), 3));
    std::int64_t s = 0;
    for (std::size_t g = 0; g < r.coefficients.size(); ++g) s += static_cast<std::int64_t>(g) * r.coefficients[g];
    CHECK(mod_norm(s, 3) == r.neg_exponent);
    std::int64_t audit = 0;
    for (const auto& row : r.audit) audit += row.g * row.contribution;
    CHECK(mod_norm(audit, 3) == r.neg_exponent);
  }
  CHECK(mt_pair(c, "P1", "Q1").neg_exponent != 0);
  CHECK_ERROR_CODE(mt_pair(c, "P9", "Q1"), ErrorCode::InconsistentPlaces);
  CHECK_ERROR_CODE(mt_pair(c, "P1", "Q9"), ErrorCode::InconsistentPlaces);
}

TEST_CASE("mt_pair: properties") {
  const PairingCase& c = toy();
  const std::vector<std::string> Ps{"P0", "P1", "P2"}, Qs{"Q1", "Q2", "Q12", "Q3"};
  for (const auto& P : Ps)
    for (const auto& Q : Qs) {
      CAPTURE(P);
      CAPTURE(Q);
      // Independent of the trace preimage.
      CHECK(mt_pair(c, P, Q, 0).neg_exponent == mt_pair(c, P, Q, 1).neg_exponent);
      CHECK(mt_pair(c, P, Q, 0).neg_exponent == mt_pair(c, P, Q, 2).neg_exponent);
    }
  auto v = [&](const std::string& P, const std::string& Q) { return mt_pair(c, P, Q).neg_exponent; };
  for (const auto& Q : Qs) {
    CHECK(v("P0", Q) == 0);
    CHECK(mod_norm(v("P1", Q) + v("P1", Q), 3) == v("P2", Q));
    CHECK(v("P1", "Q3") == 0);
  }
  for (const auto& P : Ps) CHECK(mod_norm(v(P, "Q1") + v(P, "Q2"), 3) == v(P, "Q12"));
}

TEST_CASE("local conditions") {
  const PairingCase& c = toy();
  CHECK(check_local_conditions(c, constant(c, c.nf.from_rational(1))));
  for (const auto& g : c.selmer.generators) CHECK(check_local_conditions(c, g));
  for (const auto& n : c.selmer.negative_controls) CHECK_FALSE(check_local_conditions(c, n));
}
