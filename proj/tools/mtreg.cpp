#include <iostream>

#include <CLI11.hpp>

#include "mtreg/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace mtreg::cli;
  CLI::App app{"mtreg: equivariant regulator verifier and Mazur-Tate pairing tools"};
  app.require_subcommand(1);

  VerifyOptions vo;
  std::optional<int> v_prec;
  std::optional<double> v_tol;
  auto* verify = app.add_subcommand("verify", "Decide the unit criterion for a case file");
  verify->add_option("case", vo.case_path, "Case file (mtreg-case/1)")->required();
  verify->add_option("--precision", v_prec, "Working precision M (overrides MTREG_PRECISION and the file)");
  verify->add_option("--tol", v_tol, "Float tolerance (overrides the file)");
  verify->add_flag("--j-sweep", vo.j_sweep, "Check every embedding index prime to p");
  verify->add_option("--report", vo.report_path, "Write the JSON report here");

  PairOptions po;
  auto* pair = app.add_subcommand("pair", "Evaluate Mazur-Tate pairings from the pairing pipeline");
  pair->add_option("case", po.case_path, "Case file (mtreg-case/1)")->required();
  pair->add_option("--point", po.points, "Point label; give twice (P then Q). Without it every expected pairing is checked");
  pair->add_option("--free-value", po.free_value, "Value of the free coordinate of the trace preimage");
  pair->add_option("--report", po.report_path, "Write the JSON report here");

  OracleOptions oo;
  std::optional<int> o_prec;
  auto* oracle = app.add_subcommand("oracle", "Random Bockstein oracle trials");
  oracle->add_option("--structure", oo.structure, "m_0,...,m_n")->required();
  oracle->add_option("--p", oo.p, "Prime p")->capture_default_str();
  oracle->add_option("--seed", oo.seed, "RNG seed")->capture_default_str();
  oracle->add_option("--trials", oo.trials, "Number of random phi")->capture_default_str();
  oracle->add_option("--precision", o_prec, "Working precision M (default n + 6)");
  oracle->add_flag("--self-test", oo.self_test, "Also check that a singular phi is rejected");
  oracle->add_option("--report", oo.report_path, "Write the JSON report here");

  ValidateOptions va;
  auto* validate = app.add_subcommand("validate", "Schema and consistency checks");
  validate->add_option("case", va.case_path, "Case file (mtreg-case/1)")->required();
  validate->add_option("--canonical", va.canonical_path, "Write the canonical serialization here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInvalid;
  }
  if (*verify) {
    vo.precision = v_prec;
    vo.tol = v_tol;
    return cmd_verify(vo, std::cout, std::cerr);
  }
  if (*pair) return cmd_pair(po, std::cout, std::cerr);
  if (*oracle) {
    oo.precision = o_prec;
    return cmd_oracle(oo, std::cout, std::cerr);
  }
  return cmd_validate(va, std::cout, std::cerr);
}
