// Copyright 2026 The TPASS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fmt/format.h>

#include <cstdint>
#include <fstream>
#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpass/decompose.h"
#include "tpass/equilibrium_lp.h"
#include "tpass/errors.h"
#include "tpass/game.h"
#include "tpass/game_file.h"
#include "tpass/oracle.h"

namespace tpass::cli {
namespace {

using Json = nlohmann::json;

constexpr int kOracleCap = 5;

std::string Num(double v) { return fmt::format("{:.12g}", v + 0.0); }

std::string Tuple(const Vector& v) {
  std::string out = "(";
  for (int k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += Num(v[k]);
  }
  return out + ")";
}

std::string MatrixText(const Matrix& m, const std::string& indent) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += indent;
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out += "  ";
      out += fmt::format("{:>12}", Num(m(i, j)));
    }
    out += "\n";
  }
  return out;
}

Json ToJson(const Vector& v) {
  Json out = Json::array();
  for (int k = 0; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

Json ToJson(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(ToJson(Vector(m.row(i))));
  return out;
}

std::string PassFail(bool ok) { return ok ? "pass" : "FAIL"; }

// A game file as a TPASS game, decomposing bimatrix input. Sets `notice`
// when a decomposition happened.
TpassGame RequireTpass(const GameFile& file, double tol,
                       std::optional<std::string>* notice) {
  if (const auto* game = std::get_if<TpassGame>(&file)) return *game;
  const DecompositionResult result =
      Decompose(std::get<BimatrixGame>(file), tol);
  *notice = "bimatrix input decomposed into TPASS form (extraction residual " +
            Num(result.max_residual) + ")";
  return result.game;
}

BimatrixGame AsBimatrix(const GameFile& file) {
  if (const auto* game = std::get_if<BimatrixGame>(&file)) return *game;
  return Compose(std::get<TpassGame>(file));
}

struct SolveArgs {
  std::string path;
  double tol = kEquilibriumTol;
  std::string method = "lp1";
  std::string format = "text";
};

int CmdSolve(const SolveArgs& args, std::ostream& out) {
  const GameFile file = LoadGameFile(args.path);
  std::optional<std::string> notice;
  const TpassGame game = RequireTpass(file, args.tol, &notice);

  EquilibriumSolution solution = [&] {
    if (args.method == "prop3") return SolveJointLp(game, args.tol).solution;
    return SolveEquilibrium(game, args.tol);
  }();
  double objective = solution.lp1_value;
  if (args.method == "prop3") {
    objective = CheckJointLp(game, solution.p, solution.q, args.tol).objective;
  }

  const EquilibriumReport best_response =
      IsEquilibrium(game, solution.p, solution.q, args.tol);
  const EquilibriumReport duality =
      CertifyByDuality(game, solution.p, solution.q, args.tol);
  const JointLpCheck joint =
      CheckJointLp(game, solution.p, solution.q, args.tol);
  std::optional<CrossCheckResult> oracle;
  if (game.num_rows() <= kOracleCap && game.num_cols() <= kOracleCap) {
    oracle = CrossCheckDetails(game, solution, args.tol, kOracleCap);
  }

  if (args.format == "json") {
    Json report = {
        {"status", "Optimal"},
        {"method", args.method},
        {"p", ToJson(solution.p.weights())},
        {"q", ToJson(solution.q.weights())},
        {"alpha", solution.alpha},
        {"beta", solution.beta},
        {"objective", objective},
        {"residuals",
         {{"slackness", solution.slackness_residual},
          {"row_violation", best_response.row_violation},
          {"col_violation", best_response.col_violation},
          {"duality_gap", duality.objective_gap},
          {"joint_lp_violation", joint.max_violation}}},
        {"checks",
         {{"is_equilibrium", best_response.is_equilibrium},
          {"duality_certificate", duality.is_equilibrium},
          {"joint_lp", joint.holds},
          {"oracle", oracle ? Json(oracle->confirmed) : Json(nullptr)}}},
    };
    if (notice) report["notice"] = *notice;
    out << report.dump(2) << "\n";
    return kExitOk;
  }

  if (notice) out << "notice: " << *notice << "\n";
  out << "method: " << args.method << "\n"
      << "status: Optimal\n"
      << "p*: " << Tuple(solution.p.weights()) << "\n"
      << "q*: " << Tuple(solution.q.weights()) << "\n"
      << "alpha*: " << Num(solution.alpha) << "\n"
      << "beta*: " << Num(solution.beta) << "\n"
      << "objective: " << Num(objective) << "\n"
      << "slackness residual: " << Num(solution.slackness_residual) << "\n"
      << "best response: " << PassFail(best_response.is_equilibrium)
      << " (row violation " << Num(best_response.row_violation)
      << ", column violation " << Num(best_response.col_violation) << ")\n"
      << "duality certificate: " << PassFail(duality.is_equilibrium)
      << " (objective gap " << Num(duality.objective_gap) << ")\n"
      << "joint LP: " << PassFail(joint.holds) << " (max violation "
      << Num(joint.max_violation) << ")\n";
  if (oracle) {
    out << "oracle cross-check: "
        << (oracle->confirmed ? "confirmed" : "NOT CONFIRMED") << " ("
        << oracle->num_enumerated << " equilibria enumerated)\n";
  } else {
    out << "oracle cross-check: skipped (game exceeds " << kOracleCap << "x"
        << kOracleCap << ")\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string path;
  std::string p;
  std::string q;
  double tol = kEquilibriumTol;
};

int CmdVerify(const VerifyArgs& args, std::ostream& out) {
  const GameFile file = LoadGameFile(args.path);
  std::optional<std::string> notice;
  const TpassGame game = RequireTpass(file, args.tol, &notice);
  const MixedStrategy p =
      MixedStrategy::FromWeights(ParseScalarList(args.p), kSimplexTol);
  const MixedStrategy q =
      MixedStrategy::FromWeights(ParseScalarList(args.q), kSimplexTol);
  if (p.size() != game.num_rows() || q.size() != game.num_cols()) {
    throw InputError("--p/--q lengths (" + std::to_string(p.size()) + ", " +
                     std::to_string(q.size()) + ") do not match the " +
                     std::to_string(game.num_rows()) + "x" +
                     std::to_string(game.num_cols()) + " game");
  }

  const EquilibriumReport best_response = IsEquilibrium(game, p, q, args.tol);
  const EquilibriumReport duality = CertifyByDuality(game, p, q, args.tol);
  const JointLpCheck joint = CheckJointLp(game, p, q, args.tol);

  if (notice) out << "notice: " << *notice << "\n";
  out << "payoffs: (" << Num(RowPayoff(game, p, q)) << ", "
      << Num(ColPayoff(game, p, q)) << ")\n"
      << "best response: " << PassFail(best_response.is_equilibrium)
      << " (row_violation " << Num(best_response.row_violation)
      << ", col_violation " << Num(best_response.col_violation) << ")\n"
      << "duality certificate: " << PassFail(duality.is_equilibrium)
      << " (primal violation " << Num(duality.row_violation)
      << ", dual violation " << Num(duality.col_violation) << ", objective gap "
      << Num(duality.objective_gap) << ")\n"
      << "joint LP: " << PassFail(joint.holds) << " (max violation "
      << Num(joint.max_violation) << ", objective " << Num(joint.objective)
      << ")\n";
  const bool all =
      best_response.is_equilibrium && duality.is_equilibrium && joint.holds;
  return all ? kExitOk : kExitNegative;
}

struct DecomposeArgs {
  std::string path;
  double tol = kEquilibriumTol;
  std::string format = "text";
};

int CmdDecompose(const DecomposeArgs& args, std::ostream& out) {
  const GameFile file = LoadGameFile(args.path);
  const auto* bimatrix = std::get_if<BimatrixGame>(&file);
  if (bimatrix == nullptr) {
    throw InputError("field 'kind': decompose expects a bimatrix game file");
  }
  const SeparabilityCheck check = IsSeparableSum(*bimatrix, args.tol);
  std::optional<DecompositionResult> result;
  double round_trip = 0.0;
  if (check.separable) {
    result = Decompose(*bimatrix, args.tol);
    const BimatrixGame rebuilt = Compose(result->game);
    round_trip = std::max(
        (rebuilt.row_payoffs() - bimatrix->row_payoffs()).cwiseAbs().maxCoeff(),
        (rebuilt.col_payoffs() - bimatrix->col_payoffs())
            .cwiseAbs()
            .maxCoeff());
  }

  if (args.format == "json") {
    Json report = {{"separable", check.separable},
                   {"tetrad_residual", check.tetrad_residual},
                   {"tol", args.tol}};
    if (result) {
      report["game"] = {{"kind", "tpass"},
                        {"A", ToJson(result->game.kernel())},
                        {"pi", ToJson(result->game.row_bonus())},
                        {"rho", ToJson(result->game.col_bonus())}};
      report["round_trip_residual"] = round_trip;
    }
    out << report.dump(2) << "\n";
  } else {
    out << "separable: " << (check.separable ? "yes" : "no") << "\n"
        << "tetrad residual: " << Num(check.tetrad_residual) << "\n";
    if (result) {
      out << "gauge: rho_1 = S_11 / 2 (any (A + d, pi - d, rho + d) gives the "
             "same B and C)\n"
          << "A:\n"
          << MatrixText(result->game.kernel(), "  ")
          << "pi: " << Tuple(result->game.row_bonus()) << "\n"
          << "rho: " << Tuple(result->game.col_bonus()) << "\n"
          << "round-trip residual: " << Num(round_trip) << "\n";
    }
  }
  return check.separable ? kExitOk : kExitNegative;
}

struct EnumerateArgs {
  std::string path;
  double tol = kEquilibriumTol;
};

int CmdEnumerate(const EnumerateArgs& args, std::ostream& out) {
  const BimatrixGame game = AsBimatrix(LoadGameFile(args.path));
  EnumerationOptions options;
  options.tol = args.tol;
  options.size_cap = kOracleCap;
  const auto equilibria = EnumerateEquilibria(game, options);
  for (const EnumeratedEquilibrium& e : equilibria) {
    out << "p=" << Tuple(e.p.weights()) << " q=" << Tuple(e.q.weights())
        << " payoffs=(" << Num(e.row_payoff) << ", " << Num(e.col_payoff)
        << ")\n";
  }
  return kExitOk;
}

TpassGame DemoGame() {
  Matrix kernel(2, 2);
  kernel << 0, 1, -1, 0;
  Vector bonus(2);
  bonus << 0.5, 0.75;
  return TpassGame(kernel, bonus, bonus);
}

constexpr const char* kDemoNote =
    "B(1,2) and C(2,1) above evaluate to 3/2. A circulating version of this "
    "example lists 3/4 for both; those matrices are not separable-sum "
    "(tetrad residual 3/2), so they cannot come from any (A, pi, rho).";

int CmdDemo(const std::string& name, const std::string& format,
            std::ostream& out) {
  if (name != "pd") throw InputError("unknown demo '" + name + "' (try: pd)");
  const TpassGame game = DemoGame();
  const PayoffMatrices payoffs = BuildPayoffMatrices(game);
  const EquilibriumSolution solution = SolveEquilibrium(game);
  const auto equilibria = EnumerateEquilibria(Compose(game));
  const auto pareto = ParetoImprovingCells(game, solution.alpha, solution.beta);

  if (format == "json") {
    Json cells = Json::array();
    for (const ParetoCell& cell : pareto) {
      cells.push_back({{"row", cell.row},
                       {"col", cell.col},
                       {"payoffs", {cell.row_payoff, cell.col_payoff}},
                       {"is_equilibrium",
                        IsEquilibrium(game, MixedStrategy::Pure(2, cell.row),
                                      MixedStrategy::Pure(2, cell.col))
                            .is_equilibrium}});
    }
    const Json report = {
        {"name", "pd"},
        {"game",
         {{"kind", "tpass"},
          {"A", ToJson(game.kernel())},
          {"pi", ToJson(game.row_bonus())},
          {"rho", ToJson(game.col_bonus())}}},
        {"B", ToJson(payoffs.row)},
        {"C", ToJson(payoffs.col)},
        {"note", kDemoNote},
        {"equilibrium",
         {{"p", ToJson(solution.p.weights())},
          {"q", ToJson(solution.q.weights())},
          {"alpha", solution.alpha},
          {"beta", solution.beta}}},
        {"num_equilibria", equilibria.size()},
        {"pareto_superior_cells", cells},
    };
    out << report.dump(2) << "\n";
    return kExitOk;
  }

  out << "Prisoner's-dilemma-like TPASS game (strategy 1 = defect, "
         "2 = cooperate)\n"
      << "A:\n"
      << MatrixText(game.kernel(), "  ")
      << "pi = rho = " << Tuple(game.row_bonus()) << "\n"
      << "row payoffs B = A + R(pi):\n"
      << MatrixText(payoffs.row, "  ") << "column payoffs C = -A + C(rho):\n"
      << MatrixText(payoffs.col, "  ") << "note: " << kDemoNote << "\n"
      << "equilibrium: p=" << Tuple(solution.p.weights())
      << " q=" << Tuple(solution.q.weights()) << " payoffs=("
      << Num(solution.alpha) << ", " << Num(solution.beta) << ")"
      << (equilibria.size() == 1 ? " [unique]" : "") << "\n";
  for (const ParetoCell& cell : pareto) {
    out << "pareto-superior cell: (" << cell.row << ", " << cell.col
        << ") p=" << Tuple(MixedStrategy::Pure(2, cell.row).weights())
        << " q=" << Tuple(MixedStrategy::Pure(2, cell.col).weights())
        << " payoffs=(" << Num(cell.row_payoff) << ", " << Num(cell.col_payoff)
        << ") [not an equilibrium]\n";
  }
  return kExitOk;
}

struct RandomArgs {
  int rows = 2;
  int cols = 2;
  double lo = -1.0;
  double hi = 1.0;
  std::uint64_t seed = 0;
  std::string output;
};

int CmdRandom(const RandomArgs& args, std::ostream& out, std::ostream& err) {
  const TpassGame game =
      RandomTpass(args.rows, args.cols, args.lo, args.hi, args.seed);
  const std::string text = SerializeGame(game);
  if (args.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(args.output, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write '" << args.output << "'\n";
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Equilibria of two-person additively-separable sum games",
               "tpass"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string* format) {
    cmd->add_option("--format", *format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto add_tol = [](CLI::App* cmd, double* tol) {
    cmd->add_option("--tol", *tol, "Certification tolerance")
        ->capture_default_str();
  };

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Compute an equilibrium; bimatrix input is decomposed first");
  solve_cmd->add_option("path", solve.path, "Game file")->required();
  add_tol(solve_cmd, &solve.tol);
  solve_cmd
      ->add_option("--method", solve.method,
                   "lp1: primal/dual pair; prop3: joint zero-optimum LP")
      ->check(CLI::IsMember({"lp1", "prop3"}))
      ->capture_default_str();
  add_format(solve_cmd, &solve.format);

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Check a strategy pair by best response, LP duality, and "
      "the joint LP");
  verify_cmd->add_option("path", verify.path, "Game file")->required();
  verify_cmd->add_option("--p", verify.p, "Row strategy, e.g. 1/2,1/2")
      ->required();
  verify_cmd->add_option("--q", verify.q, "Column strategy")->required();
  add_tol(verify_cmd, &verify.tol);

  DecomposeArgs decompose;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "Test a bimatrix game for separable-sum structure");
  decompose_cmd->add_option("path", decompose.path, "Bimatrix game file")
      ->required();
  add_tol(decompose_cmd, &decompose.tol);
  add_format(decompose_cmd, &decompose.format);

  EnumerateArgs enumerate;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "List equilibria by support enumeration (up to 5x5)");
  enumerate_cmd->add_option("path", enumerate.path, "Game file")->required();
  add_tol(enumerate_cmd, &enumerate.tol);

  std::string demo_name;
  std::string demo_format = "text";
  CLI::App* demo_cmd = app.add_subcommand("demo", "Run a built-in example");
  demo_cmd->add_option("name", demo_name, "Demo name: pd")->required();
  add_format(demo_cmd, &demo_format);

  RandomArgs random;
  CLI::App* random_cmd =
      app.add_subcommand("random", "Write a random TPASS game file");
  random_cmd->add_option("-m", random.rows, "Rows")->capture_default_str();
  random_cmd->add_option("-n", random.cols, "Columns")->capture_default_str();
  random_cmd->add_option("--lo", random.lo, "Lower bound")
      ->capture_default_str();
  random_cmd->add_option("--hi", random.hi, "Upper bound")
      ->capture_default_str();
  random_cmd->add_option("--seed", random.seed, "Generator seed")
      ->capture_default_str();
  random_cmd->add_option("-o", random.output, "Output path (default stdout)");

  std::vector<const char*> argv = {"tpass"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return CmdSolve(solve, out);
    if (verify_cmd->parsed()) return CmdVerify(verify, out);
    if (decompose_cmd->parsed()) return CmdDecompose(decompose, out);
    if (enumerate_cmd->parsed()) return CmdEnumerate(enumerate, out);
    if (demo_cmd->parsed()) return CmdDemo(demo_name, demo_format, out);
    if (random_cmd->parsed()) return CmdRandom(random, out, err);
  } catch (const NotSeparable& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const CertificationFailure& e) {
    err << "certification failure: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace tpass::cli
