#include "qosc/cli.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qosc/algebra.hpp"
#include "qosc/degeneracy.hpp"
#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/output.hpp"
#include "qosc/qvalue.hpp"
#include "qosc/spectrum.hpp"
#include "qosc/verify.hpp"

namespace qosc {

namespace {

struct CommonOptions {
  std::string format = "csv";
  double tol = 1e-13;
  std::string precision = "double";
  std::string out_path;

  bool extended() const { return precision == "extended"; }
};

void add_common(CLI::App* sub, CommonOptions& common, bool with_format = true) {
  if (with_format)
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  sub->add_option("--tol", common.tol, "relative solver tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--precision", common.precision, "numeric precision")
      ->check(CLI::IsMember({"double", "extended"}))
      ->capture_default_str();
  sub->add_option("--out", common.out_path, "write output to this file instead of stdout");
}

void base_metadata(OutputRecord& rec, const CommonOptions& common) {
  rec.parameters.emplace_back("precision", text_cell(common.precision));
  rec.parameters.emplace_back("tol", number_cell(common.tol));
}

int emit(const OutputRecord& rec, const CommonOptions& common) {
  const std::string payload = common.format == "json" ? to_json(rec) : to_csv(rec);
  if (common.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + common.out_path);
  file << payload;
  return 0;
}

constexpr std::array<int, 11> kPresetLevels{2, 3, 4, 5, 6, 10, 25, 50, 100, 200, 400};

int cmd_spectrum(const std::string& q_text, int n_max, const CommonOptions& common) {
  const QExpression qx = QExpression::parse(q_text);
  OutputRecord rec;
  rec.command = "spectrum";
  rec.parameters.emplace_back("q", text_cell(qx.text()));
  rec.parameters.emplace_back("n_max", number_cell(static_cast<long long>(n_max)));
  base_metadata(rec, common);
  rec.columns = {"n", "E_n"};

  const DeformationParameter q_double(qx.value<double>());
  if (common.extended()) {
    const Deformation<ext_real> q(qx.value<ext_real>());
    for (int n = 0; n <= n_max; ++n)
      rec.rows.push_back({number_cell(static_cast<long long>(n)), number_cell(energy(n, q))});
  } else {
    for (int n = 0; n <= n_max; ++n)
      rec.rows.push_back(
          {number_cell(static_cast<long long>(n)), number_cell(energy(n, q_double))});
  }
  if (q_double.regime() == Regime::sub_unit)
    rec.extra_metadata.emplace_back(
        "truncation_index", number_cell(static_cast<long long>(truncation_index(q_double))));
  return emit(rec, common);
}

int cmd_degeneracy(int m, int k, const CommonOptions& common) {
  const DegeneracySolution sol = solve_degeneracy({m, k}, common.tol);
  OutputRecord rec;
  rec.command = "degeneracy";
  rec.parameters.emplace_back("m", number_cell(static_cast<long long>(m)));
  rec.parameters.emplace_back("k", number_cell(static_cast<long long>(k)));
  base_metadata(rec, common);
  rec.columns = {"m", "k", "q_value", "residual", "method"};

  Cell q_cell = number_cell(sol.q_value);
  if (common.extended()) {
    const ext_real q = k == 1   ? q_nearest_neighbor_ext(m)
                       : k == 2 ? q_next_nearest_ext(m)
                                : q_general_ext({m, k});
    q_cell = number_cell(q);
  }
  rec.rows.push_back({number_cell(static_cast<long long>(m)),
                      number_cell(static_cast<long long>(k)), q_cell,
                      number_cell(sol.residual), text_cell(to_string(sol.method))});
  return emit(rec, common);
}

int cmd_table1(const std::vector<int>& levels, const std::string& preset,
               const CommonOptions& common) {
  std::vector<int> rows_wanted = levels;
  if (!preset.empty())
    rows_wanted.assign(kPresetLevels.begin(), kPresetLevels.end());
  if (rows_wanted.empty())
    throw std::invalid_argument("table1: give --n values or --preset paper");

  OutputRecord rec;
  rec.command = "table1";
  rec.parameters.emplace_back("preset", text_cell(preset.empty() ? "none" : preset));
  base_metadata(rec, common);
  rec.columns = {"n", "q_n"};
  double max_residual = 0.0;
  for (const ZeroLevelRow& row : zero_level_table(rows_wanted)) {
    rec.rows.push_back({number_cell(static_cast<long long>(row.n)), number_cell(row.q)});
    max_residual = std::max(max_residual, row.residual);
  }
  rec.extra_metadata.emplace_back("max_residual", number_cell(max_residual));
  return emit(rec, common);
}

int cmd_xp(const std::string& q_text, int n_max, const CommonOptions& common) {
  const QExpression qx = QExpression::parse(q_text);
  OutputRecord rec;
  rec.command = "xp";
  rec.parameters.emplace_back("q", text_cell(qx.text()));
  rec.parameters.emplace_back("n_max", number_cell(static_cast<long long>(n_max)));
  base_metadata(rec, common);
  rec.columns = {"n", "commutator_eigenvalue"};

  const DeformationParameter q_double(qx.value<double>());
  if (common.extended()) {
    const Deformation<ext_real> q(qx.value<ext_real>());
    for (int n = 0; n <= n_max; ++n)
      rec.rows.push_back(
          {number_cell(static_cast<long long>(n)), number_cell(xp_commutator_value(n, q))});
  } else {
    for (int n = 0; n <= n_max; ++n)
      rec.rows.push_back({number_cell(static_cast<long long>(n)),
                          number_cell(xp_commutator_value(n, q_double))});
  }

  // report the level on which the commutator vanishes, when q = m/(m+1)
  const double qv = q_double.value();
  if (qv < 1.0) {
    const double m_guess = std::round(qv / (1.0 - qv));
    if (m_guess >= 1.0 && m_guess < 9e15 &&
        std::abs(qv - m_guess / (m_guess + 1.0)) <= 1e-12)
      rec.extra_metadata.emplace_back(
          "classical_level", number_cell(static_cast<long long>(m_guess)));
  }
  return emit(rec, common);
}

int cmd_fock(int dim, const std::string& q_text, const CommonOptions& common) {
  const QExpression qx = QExpression::parse(q_text);
  const DeformationParameter q(qx.value<double>());
  const FockRep rep = build_fock_rep(dim, q);
  const PhaseSpaceOps phase = build_phase_space(rep);
  const Matrix h = hamiltonian(rep);

  OutputRecord rec;
  rec.command = "fock";
  rec.parameters.emplace_back("dim", number_cell(static_cast<long long>(dim)));
  rec.parameters.emplace_back("q", text_cell(qx.text()));
  base_metadata(rec, common);
  rec.columns = {"operator", "row", "col", "value"};
  const std::array<std::pair<const char*, const Matrix*>, 6> ops{
      {{"a", &rep.a},
       {"a_dag", &rep.a_dag},
       {"n", &rep.n_op},
       {"h", &h},
       {"x", &phase.x},
       {"p_imag", &phase.p_imag}}};
  for (const auto& [name, matrix] : ops)
    for (int r = 0; r < matrix->rows(); ++r)
      for (int c = 0; c < matrix->cols(); ++c)
        rec.rows.push_back({text_cell(name), number_cell(static_cast<long long>(r)),
                            number_cell(static_cast<long long>(c)),
                            number_cell((*matrix)(r, c))});
  const RelationResiduals res = check_defining_relations(rep);
  rec.extra_metadata.emplace_back("deformed_commutation_residual",
                                  number_cell(res.deformed_commutation));
  rec.extra_metadata.emplace_back("number_commutator_residual",
                                  number_cell(res.number_commutators));
  rec.extra_metadata.emplace_back("number_link_residual", number_cell(res.number_link));
  return emit(rec, common);
}

int cmd_algebra(int two_j, const std::string& q_text, const CommonOptions& common) {
  const QExpression qx = QExpression::parse(q_text);
  const DeformationParameter q(qx.value<double>());
  const SpinModule mod = build_spin_module(two_j, q);

  OutputRecord rec;
  rec.command = "algebra";
  rec.parameters.emplace_back("two_j", number_cell(static_cast<long long>(two_j)));
  rec.parameters.emplace_back("q", text_cell(qx.text()));
  base_metadata(rec, common);
  rec.columns = {"operator", "row", "col", "value"};
  const std::array<std::pair<const char*, const Matrix*>, 4> ops{
      {{"j_plus", &mod.j_plus},
       {"j_minus", &mod.j_minus},
       {"j0", &mod.j0},
       {"j3", &mod.j3}}};
  for (const auto& [name, matrix] : ops)
    for (int r = 0; r < matrix->rows(); ++r)
      for (int c = 0; c < matrix->cols(); ++c)
        rec.rows.push_back({text_cell(name), number_cell(static_cast<long long>(r)),
                            number_cell(static_cast<long long>(c)),
                            number_cell((*matrix)(r, c))});
  rec.extra_metadata.emplace_back("dim", number_cell(static_cast<long long>(mod.dim)));
  rec.extra_metadata.emplace_back("relation_residual",
                                  number_cell(check_spin_relations(mod)));
  return emit(rec, common);
}

int cmd_verify(const std::string& suite, const CommonOptions& common) {
  const VerifyOptions options{common.tol, common.extended()};
  std::vector<VerifyCheck> checks;
  if (suite == "core")
    checks = core_checks(options);
  else if (suite == "degeneracy")
    checks = degeneracy_checks(options);
  else if (suite == "fock")
    checks = fock_checks(options);
  else if (suite == "algebra")
    checks = algebra_checks(options);
  else
    checks = all_checks(options);

  OutputRecord rec;
  rec.command = "verify";
  rec.parameters.emplace_back("suite", text_cell(suite));
  base_metadata(rec, common);
  rec.columns = {"suite", "check", "measure", "threshold", "status"};
  for (const VerifyCheck& c : checks)
    rec.rows.push_back({text_cell(c.suite), text_cell(c.name), number_cell(c.measure),
                        number_cell(c.threshold), text_cell(c.pass ? "pass" : "fail")});
  const bool passed = all_pass(checks);
  rec.extra_metadata.emplace_back("passed", text_cell(passed ? "true" : "false"));

  CommonOptions json_only = common;
  json_only.format = "json";  // the verify report is always JSON
  emit(rec, json_only);
  return passed ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"spectra, level degeneracies, and operator representations of the "
               "Tamm-Dancoff q-deformed oscillator"};
  app.require_subcommand(1);

  CommonOptions spectrum_common;
  std::string spectrum_q;
  int spectrum_n_max = 0;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "level energies E_0..E_n_max at fixed q");
  spectrum_cmd->add_option("--q", spectrum_q,
                           "deformation parameter (decimal, a/b, sqrt(a/b), nextnearest(m))")
      ->required();
  spectrum_cmd->add_option("--n-max", spectrum_n_max, "highest level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(spectrum_cmd, spectrum_common);

  CommonOptions degeneracy_common;
  int degeneracy_m = 0;
  int degeneracy_k = 1;
  CLI::App* degeneracy_cmd =
      app.add_subcommand("degeneracy", "solve E_m = E_{m+k} for q in (0, 1)");
  degeneracy_cmd->add_option("--m", degeneracy_m, "lower level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  degeneracy_cmd->add_option("--k", degeneracy_k, "level gap")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(degeneracy_cmd, degeneracy_common);

  CommonOptions table_common;
  std::vector<int> table_levels;
  std::string table_preset;
  CLI::App* table_cmd =
      app.add_subcommand("table1", "parameter values q_n that pin E_0 = E_n");
  table_cmd->add_option("--n", table_levels, "levels n (each >= 2)");
  table_cmd->add_option("--preset", table_preset, "row preset")
      ->check(CLI::IsMember({"paper"}));
  add_common(table_cmd, table_common);

  CommonOptions xp_common;
  std::string xp_q;
  int xp_n_max = 0;
  CLI::App* xp_cmd = app.add_subcommand(
      "xp", "position-momentum commutator eigenvalues on the number states");
  xp_cmd->add_option("--q", xp_q, "deformation parameter")->required();
  xp_cmd->add_option("--n-max", xp_n_max, "highest level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(xp_cmd, xp_common);

  CommonOptions fock_common;
  int fock_dim = 0;
  std::string fock_q;
  CLI::App* fock_cmd = app.add_subcommand(
      "fock", "truncated ladder, number, and phase-space matrices (row-major)");
  fock_cmd->add_option("--dim", fock_dim, "truncation dimension (>= 2)")
      ->required()
      ->check(CLI::PositiveNumber);
  fock_cmd->add_option("--q", fock_q, "deformation parameter")->required();
  add_common(fock_cmd, fock_common);

  CommonOptions algebra_common;
  int algebra_two_j = 0;
  std::string algebra_q;
  CLI::App* algebra_cmd = app.add_subcommand(
      "algebra", "spin-j representation matrices of the deformed su(2)+u(1) algebra");
  algebra_cmd->add_option("--two-j", algebra_two_j, "twice the spin label")
      ->required()
      ->check(CLI::NonNegativeNumber);
  algebra_cmd->add_option("--q", algebra_q, "deformation parameter")->required();
  add_common(algebra_cmd, algebra_common);

  CommonOptions verify_common;
  std::string verify_suite = "all";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the module invariant suites (JSON report)");
  verify_cmd->add_option("--suite", verify_suite, "which suite to run")
      ->check(CLI::IsMember({"core", "degeneracy", "fock", "algebra", "all"}))
      ->capture_default_str();
  add_common(verify_cmd, verify_common, /*with_format=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_q, spectrum_n_max, spectrum_common);
    if (degeneracy_cmd->parsed()) return cmd_degeneracy(degeneracy_m, degeneracy_k, degeneracy_common);
    if (table_cmd->parsed()) return cmd_table1(table_levels, table_preset, table_common);
    if (xp_cmd->parsed()) return cmd_xp(xp_q, xp_n_max, xp_common);
    if (fock_cmd->parsed()) return cmd_fock(fock_dim, fock_q, fock_common);
    if (algebra_cmd->parsed()) return cmd_algebra(algebra_two_j, algebra_q, algebra_common);
    if (verify_cmd->parsed()) return cmd_verify(verify_suite, verify_common);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << " (best bracket [" << format_double(e.bracket_lo())
              << ", " << format_double(e.bracket_hi()) << "])\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no command selected\n";
  return 2;
}

}  // namespace qosc
