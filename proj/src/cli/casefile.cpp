#include "mtreg/cli/casefile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json_path.hpp"
#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg::cli {

namespace {

const char* kHypotheses = "abcdefghi";

std::string rat_str(const Rational& x) { return to_string(x); }

CaseHeader parse_header(const JNode& h) {
  CaseHeader out;
  out.p = static_cast<int>(h.at("p").as_int());
  if (out.p < 3 || out.p > 97) h.at("p").fail("p must be an odd prime below 100");
  for (int d = 2; d * d <= out.p; ++d)
    if (out.p % d == 0) h.at("p").fail("p must be prime");
  out.n = static_cast<int>(h.at("n").as_int());
  if (out.n < 1 || out.n > 4) h.at("n").fail("n must be between 1 and 4");
  out.label = h.at("label").as_string();
  h.at("hypotheses_asserted").for_each_item([&](std::size_t, const JNode& x) {
    std::string f = x.as_string();
    if (f.size() != 1 || std::string(kHypotheses).find(f) == std::string::npos) x.fail("unknown hypothesis flag \"" + f + "\"");
    out.hypotheses_asserted.push_back(f);
  });
  JNode pr = h.at("precision");
  out.M = static_cast<int>(pr.at("M").as_int());
  if (out.M < 1) pr.at("M").fail("M must be positive");
  out.float_tol = pr.at("float_tol").as_double();
  if (!(out.float_tol > 0.0)) pr.at("float_tol").fail("float_tol must be positive");
  out.j_idx.clear();
  h.at("j_idx").for_each_item([&](std::size_t, const JNode& x) { out.j_idx.push_back(x.as_int()); });
  if (out.j_idx.empty()) h.at("j_idx").fail("need at least one embedding index");
  return out;
}

HeightMatrix parse_heights(const JNode& h, const PointsStructure& st) {
  const std::string mode = h.at("mode").as_string();
  if (mode != "exact" && mode != "float") h.at("mode").fail("expected \"exact\" or \"float\"");
  HeightMatrix out{st, {}, 0.0, std::nullopt};
  if (mode == "exact") out.exact.emplace();
  else out.err = h.at("err").as_double();
  const std::size_t ord = static_cast<std::size_t>(st.group().order());
  JNode vals = h.at("values");
  if (vals.size() != static_cast<std::size_t>(st.N())) vals.fail("expected " + std::to_string(st.N()) + " rows");
  vals.for_each_item([&](std::size_t, const JNode& row) {
    if (row.size() != static_cast<std::size_t>(st.N())) row.fail("expected " + std::to_string(st.N()) + " columns");
    row.for_each_item([&](std::size_t, const JNode& cell) {
      if (cell.size() != ord) cell.fail("expected " + std::to_string(ord) + " values, one per group element");
      cell.for_each_item([&](std::size_t, const JNode& x) {
        if (out.exact) {
          Rational q = x.as_rational();
          out.exact->push_back(q);
          out.values.push_back(q.get_d());
        } else {
          out.values.push_back(x.as_double());
        }
      });
    });
  });
  return out;
}

MTTable parse_table(const JNode& t, const PointsStructure& st) {
  MTTable out{st, {}};
  const GroupData& g = st.group();
  t.at("entries").for_each_item([&](std::size_t, const JNode& e) {
    auto get = [&](const char* k) { return static_cast<int>(e.at(k).as_int()); };
    const int r = get("r"), j = get("j"), s = get("s"), i = get("i"), level = get("level");
    int row = 0, col = 0;
    with_path(e, [&] {
      row = st.index(r, j);
      col = st.index(s, i);
    });
    if (r >= st.n() || s >= st.n()) e.fail("table entries need r, s < n");
    if (level < 0 || level > st.n()) e.at("level").fail("level out of range");
    if (out.entries.count({row, col})) e.fail("duplicate entry");
    std::vector<std::int64_t> exps;
    e.at("exponents").for_each_item([&](std::size_t, const JNode& x) { exps.push_back(x.as_int()); });
    out.entries[{row, col}] = aug_family(g, level, exps);
  });
  return out;
}

AnalyticInput parse_analytic(const JNode& a, const GroupData& g) {
  AnalyticInput out;
  const std::size_t ord = static_cast<std::size_t>(g.order());
  JNode vals = a.at("values");
  if (vals.size() != ord) vals.fail("expected one value per character (" + std::to_string(ord) + ")");
  bool all_exact = true;
  std::vector<std::optional<CycloNum>> ex(ord);
  std::vector<ComplexApprox> ap(ord);
  vals.for_each_item([&](std::size_t idx, const JNode& v) {
    if (v.at("b").as_int() != static_cast<std::int64_t>(idx)) v.at("b").fail("values must be listed by b = 0, 1, ...");
    const std::string mode = v.at("mode").as_string();
    if (mode == "exact") {
      std::vector<Rational> c;
      v.at("coeffs").for_each_item([&](std::size_t, const JNode& x) { c.push_back(x.as_rational()); });
      ex[idx] = CycloNum(g.p(), g.n(), c);
      ap[idx] = ex[idx]->embed(1);
    } else if (mode == "float") {
      all_exact = false;
      ap[idx] = with_path(v, [&] { return ComplexApprox(v.at("re").as_double(), v.at("im").as_double(), v.at("err").as_double()); });
    } else {
      v.at("mode").fail("expected \"exact\" or \"float\"");
    }
  });
  if (all_exact)
    for (auto& x : ex) out.exact.push_back(*x);
  else
    out.approx = ap;
  return out;
}

nlohmann::json rat_list(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

}  // namespace

PairingSection CaseFile::pairing() const {
  if (!pairing_pipeline) raise(ErrorCode::SchemaError, "$: case has no pairing_pipeline section");
  if (header.n != 1) raise(ErrorCode::SchemaError, "$.pairing_pipeline: the pairing pipeline needs n = 1");
  return parse_pairing_pipeline(*pairing_pipeline, header.p);
}

nlohmann::json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    raise(ErrorCode::SchemaError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

CaseFile parse_case(const nlohmann::json& j) {
  JNode root(j, "$");
  if (!root.is_object()) root.fail("expected object");
  static const std::vector<std::string> known{"format", "header", "structure", "heights", "mt_table", "analytic", "pairing_pipeline", "expected_pairings"};
  root.for_each_member([&](const std::string& key, const JNode& n) {
    if (std::find(known.begin(), known.end(), key) == known.end()) n.fail("unknown section");
  });
  if (root.at("format").as_string() != kCaseFormat) root.at("format").fail(std::string("expected \"") + kCaseFormat + "\"");
  CaseFile c;
  c.header = parse_header(root.at("header"));
  GroupData g(c.header.p, c.header.n);
  JNode sm = root.at("structure").at("m");
  std::vector<int> m;
  sm.for_each_item([&](std::size_t, const JNode& x) { m.push_back(static_cast<int>(x.as_int())); });
  c.structure = with_path(sm, [&] { return PointsStructure(g, m); });
  if (c.structure.N() < 1) sm.fail("need at least one point");
  if (auto h = root.find("heights")) c.heights = parse_heights(*h, c.structure);
  if (auto t = root.find("mt_table")) c.mt_table = parse_table(*t, c.structure);
  if (auto a = root.find("analytic")) c.analytic = parse_analytic(*a, g);
  if (auto pp = root.find("pairing_pipeline")) {
    if (!pp->is_object()) pp->fail("expected object");
    c.pairing_pipeline = pp->raw();
  }
  if (auto ep = root.find("expected_pairings"))
    ep->for_each_member([&](const std::string& key, const JNode& v) { c.expected_pairings[key] = v.as_int(); });
  return c;
}

CaseFile load_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::SchemaError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_case(parse_json_text(ss.str(), path));
}

nlohmann::json serialize_case(const CaseFile& c) {
  nlohmann::json j;
  j["format"] = kCaseFormat;
  const CaseHeader& h = c.header;
  j["header"] = {{"p", h.p}, {"n", h.n}, {"label", h.label}, {"hypotheses_asserted", h.hypotheses_asserted},
                 {"precision", {{"M", h.M}, {"float_tol", h.float_tol}}}, {"j_idx", h.j_idx}};
  j["structure"] = {{"m", c.structure.m()}};
  const std::size_t ord = static_cast<std::size_t>(c.group().order());
  if (c.heights) {
    const HeightMatrix& hm = *c.heights;
    nlohmann::json rows = nlohmann::json::array();
    for (int row = 0; row < c.structure.N(); ++row) {
      nlohmann::json cols = nlohmann::json::array();
      for (int col = 0; col < c.structure.N(); ++col) {
        nlohmann::json cell = nlohmann::json::array();
        for (std::size_t k = 0; k < ord; ++k) {
          const std::size_t i = static_cast<std::size_t>(row * c.structure.N() + col) * ord + k;
          if (hm.exact) cell.push_back(rat_str((*hm.exact)[i]));
          else cell.push_back(hm.values[i]);
        }
        cols.push_back(cell);
      }
      rows.push_back(cols);
    }
    j["heights"] = {{"mode", hm.exact ? "exact" : "float"}, {"values", rows}};
    if (!hm.exact) j["heights"]["err"] = hm.err;
  }
  if (c.mt_table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, fam] : c.mt_table->entries) {
      const PointIndex a = c.structure.at(key.first), b = c.structure.at(key.second);
      std::vector<std::int64_t> exps;
      for (const auto& v : fam) exps.push_back(v.exponent());
      entries.push_back({{"r", a.r}, {"j", a.j}, {"s", b.r}, {"i", b.j}, {"level", fam.empty() ? 0 : fam[0].level()}, {"exponents", exps}});
    }
    j["mt_table"] = {{"entries", entries}};
  }
  if (c.analytic) {
    nlohmann::json vals = nlohmann::json::array();
    for (std::size_t b = 0; b < ord; ++b) {
      if (c.analytic->is_exact()) {
        vals.push_back({{"b", b}, {"mode", "exact"}, {"coeffs", rat_list(c.analytic->exact[b].coeffs())}});
      } else {
        const ComplexApprox& z = c.analytic->approx[b];
        vals.push_back({{"b", b}, {"mode", "float"}, {"re", z.re}, {"im", z.im}, {"err", z.err}});
      }
    }
    j["analytic"] = {{"values", vals}};
  }
  if (c.pairing_pipeline) j["pairing_pipeline"] = *c.pairing_pipeline;
  if (!c.expected_pairings.empty()) j["expected_pairings"] = c.expected_pairings;
  return j;
}

ValidationReport validate_case(const CaseFile& c) {
  ValidationReport rep;
  const GroupData g = c.group();
  for (auto j : c.header.j_idx)
    if (mod_norm(j, g.p()) == 0) raise(ErrorCode::BadExponent, "$.header.j_idx: " + std::to_string(j) + " is divisible by p");
  if (c.header.M * std::log2(static_cast<double>(g.p())) > 60.0) raise(ErrorCode::SchemaError, "$.header.precision.M: too large");
  rep.checks.push_back("header: p = " + std::to_string(g.p()) + ", n = " + std::to_string(g.n()) + ", N = " + std::to_string(c.structure.N()));
  if (c.heights) {
    c.heights->validate();
    rep.checks.push_back(std::string("heights: ") + (c.heights->is_exact() ? "exact" : "float") + ", no vanishing rows");
  }
  if (c.mt_table) {
    c.mt_table->validate();
    rep.checks.push_back("mt_table: " + std::to_string(c.mt_table->entries.size()) + " cells, levels and invariance consistent");
  }
  if (c.analytic) rep.checks.push_back(std::string("analytic: ") + (c.analytic->is_exact() ? "exact" : "float") + " values for all characters");
  if (c.pairing_pipeline) {
    PairingSection ps = c.pairing();
    const PairingCase& pc = ps.pcase;
    rep.checks.push_back("pairing_pipeline: " + std::to_string(pc.places.size()) + " places consistent");
    for (std::size_t k = 0; k < pc.selmer.generators.size(); ++k)
      if (!check_local_conditions(pc, pc.selmer.generators[k]))
        raise(ErrorCode::InconsistentPlaces, "$.pairing_pipeline.selmer.generators[" + std::to_string(k) + "] fails the local conditions");
    for (std::size_t k = 0; k < pc.selmer.negative_controls.size(); ++k)
      if (check_local_conditions(pc, pc.selmer.negative_controls[k]))
        raise(ErrorCode::InconsistentPlaces, "$.pairing_pipeline.selmer.negative_controls[" + std::to_string(k) + "] satisfies the local conditions");
    rep.checks.push_back("selmer: generators pass, negative controls fail the local conditions");
  }
  return rep;
}

}  // namespace mtreg::cli
