#include "mtreg/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "mtreg/bockstein/independence.hpp"
#include "mtreg/bockstein/oracle.hpp"
#include "mtreg/bockstein/phi.hpp"
#include "mtreg/cli/casefile.hpp"
#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"
#include "mtreg/mazurtate/pairing.hpp"

namespace mtreg::cli {

namespace {

using nlohmann::json;

json error_json(const Error& e) { return {{"code", error_name(e.code())}, {"detail", e.detail()}}; }

void write_report(const std::string& path, const json& report) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) raise(ErrorCode::SchemaError, path + ": cannot write report");
  f << report.dump(1) << '\n';
}

// Runs body; on a library error prints the code, stores it in the report and returns kInvalid.
template <class F>
int guarded(json& report, const std::string& report_path, std::ostream& out, std::ostream& err, F&& body) {
  int code = kInvalid;
  try {
    code = body();
  } catch (const Error& e) {
    err << "error: " << error_name(e.code()) << ": " << e.detail() << '\n';
    out << "result: ERROR\n";
    report["error"] = error_json(e);
    report["result"] = "ERROR";
    code = kInvalid;
  }
  try {
    write_report(report_path, report);
  } catch (const Error& e) {
    err << "error: " << e.detail() << '\n';
    return kInvalid;
  }
  return code;
}

json elem_json(const IntElem& x) {
  json a = json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.get_str());
  return a;
}

std::string format_witness(const RatElem& w) {
  std::ostringstream s;
  bool first = true;
  for (std::int64_t k = 0; k < w.group().order(); ++k) {
    if (sgn(w[k]) == 0) continue;
    if (!first) s << " + ";
    s << "(" << to_string(w[k]) << ")";
    if (k > 0) s << "*s^" << k;
    first = false;
  }
  if (first) s << "0";
  return s.str();
}

std::vector<int> parse_structure(const std::string& s) {
  std::vector<int> m;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      m.push_back(v);
    } catch (const std::logic_error&) {
      raise(ErrorCode::SchemaError, "--structure: \"" + tok + "\" is not an integer");
    }
  }
  if (m.size() < 2) raise(ErrorCode::SchemaError, "--structure: need m_0,...,m_n with n >= 1");
  return m;
}

}  // namespace

PrecisionChoice resolve_precision(std::optional<int> flag, const char* env, int file_M) {
  if (flag) {
    if (*flag < 1) raise(ErrorCode::PrecisionExhausted, "--precision must be positive");
    return {*flag, "flag"};
  }
  if (env && *env) {
    const std::string s(env);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != s.size() || v < 1) raise(ErrorCode::PrecisionExhausted, "MTREG_PRECISION=\"" + s + "\" is not a positive integer");
    return {v, "env"};
  }
  return {file_M, "file"};
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  json report{{"command", "verify"}, {"case", o.case_path}};
  return guarded(report, o.report_path, out, err, [&]() -> int {
    CaseFile c = load_case(o.case_path);
    validate_case(c);
    if (!c.heights) raise(ErrorCode::SchemaError, "$.heights: required by verify");
    if (!c.mt_table) raise(ErrorCode::SchemaError, "$.mt_table: required by verify");
    if (!c.analytic) raise(ErrorCode::SchemaError, "$.analytic: required by verify");
    const GroupData g = c.group();
    const PrecisionChoice prec = resolve_precision(o.precision, std::getenv("MTREG_PRECISION"), c.header.M);
    if (prec.M <= g.n()) raise(ErrorCode::PrecisionExhausted, "M = " + std::to_string(prec.M) + " must exceed n");
    const double tol = o.tol.value_or(c.header.float_tol);
    if (!(tol > 0.0)) raise(ErrorCode::PrecisionExhausted, "--tol must be positive");
    report["label"] = c.header.label;
    report["precision"] = {{"M", prec.M}, {"source", prec.source}, {"tol", tol}};
    out << "case: " << c.header.label << "\n";
    out << "p = " << g.p() << ", n = " << g.n() << ", N = " << c.structure.N() << ", M = " << prec.M << " (" << prec.source
        << "), tol = " << tol << "\n";

    const PsiMatrix psi = solve_psi(*c.mt_table);
    json psi_json = json::array();
    for (int row = 0; row < c.structure.N(); ++row) {
      json r = json::array();
      for (int col = 0; col < c.structure.N(); ++col) r.push_back(elem_json(psi(row, col)));
      psi_json.push_back(r);
    }
    report["psi"] = psi_json;

    // Bockstein cross-check: Lambda = -Psi on the lower block must reproduce the table.
    std::string cross = "skipped";
    if (c.structure.lower_count() > 0 && det_is_unit(psi)) {
      GRContext ctx(g, prec.M);
      GRMatrix lam(ctx, c.structure.N());
      for (int row = 0; row < c.structure.N(); ++row)
        for (int col = 0; col < c.structure.N(); ++col) {
          const bool lower = row < c.structure.lower_count() && col < c.structure.lower_count();
          lam(row, col) = lower ? ctx.neg(ctx.from(psi(row, col))) : ctx.from(psi(row, col));
        }
      cross = snake_table(PhiMatrix(c.structure, lam).inverse()) == *c.mt_table ? "agree" : "disagree";
    }
    report["bockstein_crosscheck"] = cross;
    out << "bockstein cross-check: " << cross << "\n";
    if (cross == "disagree") raise(ErrorCode::TableLevelMismatch, "$.mt_table: snake-lemma values disagree with the table");

    std::vector<std::int64_t> js;
    if (o.j_sweep) {
      for (std::int64_t j = 1; j < g.order(); ++j)
        if (j % g.p() != 0) js.push_back(j);
    } else {
      js = c.header.j_idx;
    }
    const bool exact = c.heights->is_exact() && c.analytic->is_exact();
    report["mode"] = exact ? "exact" : "float";
    bool all_pass = true;
    json verdicts = json::array();
    for (std::int64_t j : js) {
      RegulatorComponents comp = assemble_regulator(*c.heights, psi, j, exact);
      Verdict v = verify_unit_criterion(*c.analytic, comp, g, tol, Integer(1000000));
      all_pass = all_pass && v.pass;
      json w = json::array();
      for (const auto& x : v.witness.coeffs()) w.push_back(to_string(x));
      json vals = json::array();
      for (const auto& x : v.valuations) vals.push_back(x ? json(*x) : json(nullptr));
      json vj{{"j_idx", j}, {"pass", v.pass}, {"witness", w}, {"valuations", vals}, {"sign", comp.sign}};
      if (!v.margins.empty()) vj["margins"] = v.margins;
      verdicts.push_back(vj);
      out << "j_idx " << j << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
      out << "  witness: " << format_witness(v.witness) << "\n";
      if (!v.pass) {
        out << "  valuations:";
        for (std::size_t k = 0; k < v.valuations.size(); ++k)
          out << " s^" << k << ":" << (v.valuations[k] ? std::to_string(*v.valuations[k]) : std::string("inf"));
        out << "\n";
      }
    }
    report["verdicts"] = verdicts;
    report["result"] = all_pass ? "PASS" : "FAIL";
    out << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kPass : kFail;
  });
}

int cmd_pair(const PairOptions& o, std::ostream& out, std::ostream& err) {
  json report{{"command", "pair"}, {"case", o.case_path}};
  return guarded(report, o.report_path, out, err, [&]() -> int {
    CaseFile c = load_case(o.case_path);
    const PairingSection ps = c.pairing();
    const GroupData g = c.group();
    std::vector<std::pair<std::string, std::string>> todo;
    if (!o.points.empty()) {
      if (o.points.size() != 2) raise(ErrorCode::SchemaError, "pair: give --point P --point Q");
      todo.emplace_back(o.points[0], o.points[1]);
    } else {
      if (c.expected_pairings.empty()) raise(ErrorCode::SchemaError, "$.expected_pairings: nothing to evaluate");
      for (const auto& [key, v] : c.expected_pairings) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) raise(ErrorCode::SchemaError, "$.expected_pairings." + key + ": expected \"P,Q\"");
        todo.emplace_back(key.substr(0, comma), key.substr(comma + 1));
      }
    }
    bool all_match = true;
    json results = json::array();
    for (const auto& [P, Q] : todo) {
      PairResult r = mt_pair(ps.pcase, P, Q, o.free_value);
      const AugClass a = r.pairing(g);
      json audit = json::array();
      for (const auto& row : r.audit) audit.push_back({{"place", row.place}, {"g", row.g}, {"contribution", row.contribution}});
      json rj{{"P", P}, {"Q", Q}, {"neg_exponent", r.neg_exponent}, {"exponent", a.exponent()}, {"coefficients", r.coefficients},
              {"audit", audit}};
      out << "<" << P << "," << Q << "> = " << a.exponent() << " (s - 1) mod I^2  [-<P,Q>: " << r.neg_exponent << "]\n";
      for (const auto& row : r.audit) out << "  " << row.place << " g=" << row.g << " contribution " << row.contribution << "\n";
      const auto it = c.expected_pairings.find(P + "," + Q);
      if (it != c.expected_pairings.end()) {
        const bool match = mod_norm(it->second - r.neg_exponent, g.p()) == 0;
        all_match = all_match && match;
        rj["expected"] = it->second;
        rj["match"] = match;
        out << "  expected " << it->second << ": " << (match ? "match" : "MISMATCH") << "\n";
      }
      results.push_back(rj);
    }
    report["pairings"] = results;
    report["result"] = all_match ? "PASS" : "FAIL";
    out << "result: " << (all_match ? "PASS" : "FAIL") << "\n";
    return all_match ? kPass : kFail;
  });
}

int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  json report{{"command", "oracle"}, {"structure", o.structure}, {"seed", o.seed}, {"trials", o.trials}};
  return guarded(report, o.report_path, out, err, [&]() -> int {
    if (o.trials < 0) raise(ErrorCode::SchemaError, "--trials must be non-negative");
    bool prime = o.p >= 3;
    for (int d = 2; d * d <= o.p; ++d) prime = prime && o.p % d != 0;
    if (!prime) raise(ErrorCode::SchemaError, "--p must be an odd prime");
    const std::vector<int> m = parse_structure(o.structure);
    const GroupData g(o.p, static_cast<int>(m.size()) - 1);
    const PointsStructure st(g, m);
    const PrecisionChoice prec = resolve_precision(o.precision, std::getenv("MTREG_PRECISION"), g.n() + 6);
    if (prec.M <= g.n()) raise(ErrorCode::PrecisionExhausted, "M = " + std::to_string(prec.M) + " must exceed n");
    report["p"] = o.p;
    report["n"] = g.n();
    report["precision"] = {{"M", prec.M}, {"source", prec.source}};

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> small(-3, 3);
    auto rand_elem = [&] {
      IntElem x = IntElem::zero(g, Integer(0));
      for (std::int64_t i = 0; i < g.order(); ++i) x[i] = small(rng);
      return x;
    };
    int snake_agree = 0, indep_agree = 0, indep_run = 0, nonempty = 0;
    json trials = json::array();
    for (int t = 0; t < o.trials; ++t) {
      const PhiMatrix phi = random_phi(st, prec.M, rng);
      const PhiMatrix lambda = phi.inverse();
      const MTTable snake = snake_table(phi);
      const MTTable formula = pairing_from_lambda(lambda);
      const bool agree = snake == formula;
      snake_agree += agree;
      nonempty += !snake.entries.empty();
      json tj{{"trial", t}, {"snake_equals_formula", agree}, {"cells", snake.entries.size()}};
      if (st.lower_count() > 0) {
        const PsiMatrix psi = solve_psi(snake);
        PsiMatrix other = psi_from_lambda(lambda);
        for (int k = 0; k < 3; ++k) {
          std::uniform_int_distribution<int> cell(0, st.lower_count() - 1);
          other = legal_move(other, cell(rng), cell(rng), rand_elem(), rand_elem(), rand_elem());
        }
        bool unit = false;
        std::string note;
        try {
          unit = independence_check(other, psi, prec.M).unit;
        } catch (const Error& e) {
          note = std::string(error_name(e.code())) + ": " + e.detail();
        }
        ++indep_run;
        indep_agree += unit;
        tj["independence_unit"] = unit;
        if (!note.empty()) tj["independence_error"] = note;
      }
      trials.push_back(tj);
    }
    report["trials_detail"] = trials;
    report["snake_vs_formula"] = {{"agree", snake_agree}, {"total", o.trials}};
    report["independence"] = {{"unit", indep_agree}, {"total", indep_run}};
    out << "structure " << o.structure << " (p = " << o.p << ", n = " << g.n() << ", N = " << st.N() << "), M = " << prec.M
        << ", seed " << o.seed << "\n";
    out << "snake vs formula: " << snake_agree << "/" << o.trials << " agree";
    if (nonempty == 0) out << " (tables empty)";
    out << "\n";
    if (indep_run > 0) out << "independence: " << indep_agree << "/" << indep_run << " unit witnesses\n";
    bool ok = snake_agree == o.trials && indep_agree == indep_run;

    if (o.self_test) {
      bool rejected = true;
      if (st.lower_count() > 0) {
        GRMatrix z = GRMatrix::identity(GRContext(g, prec.M), st.N());
        for (int row = 0; row < st.lower_count(); ++row)
          for (int col = 0; col < st.lower_count(); ++col) z(row, col) = z.ctx().zero();
        const PhiMatrix bad(st, z);
        rejected = !bad.is_invertible();
        try {
          bad.inverse();
          rejected = false;
        } catch (const Error& e) {
          rejected = rejected && e.code() == ErrorCode::ZeroInversion;
        }
      }
      report["self_test"] = {{"singular_phi_rejected", rejected}};
      out << "self-test: singular phi " << (rejected ? "rejected" : "ACCEPTED") << "\n";
      ok = ok && rejected;
    }
    report["result"] = ok ? "PASS" : "FAIL";
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kPass : kFail;
  });
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
  json report{{"command", "validate"}, {"case", o.case_path}};
  return guarded(report, "", out, err, [&]() -> int {
    CaseFile c = load_case(o.case_path);
    ValidationReport rep = validate_case(c);
    for (const auto& line : rep.checks) out << line << "\n";
    if (!o.canonical_path.empty()) {
      std::ofstream f(o.canonical_path);
      if (!f) raise(ErrorCode::SchemaError, o.canonical_path + ": cannot write");
      f << serialize_case(c).dump(1) << '\n';
    }
    out << "result: VALID\n";
    return kPass;
  });
}

}  // namespace mtreg::cli
